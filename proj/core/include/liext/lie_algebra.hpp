#pragma once

#include "liext/ratmat.hpp"
#include "liext/scalar.hpp"

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace liext {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Thrown when an operation's stated precondition fails (non-representation
/// coefficients, non-derivation flow samples, mismatched shapes...).
class ContractViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct BracketEntry {
  int i, j, k;
  Scalar v;
};

/// Finite-dimensional Lie algebra given by structure constants
/// [e_i, e_j] = sum_k c[i][j][k] e_k.
///
/// The constructor enforces shapes and antisymmetric completion only; Jacobi
/// is a checked property (check_jacobi), so broken tables are representable.
class LieAlgebra {
public:
  LieAlgebra(int dim, std::vector<std::string> basis_names, std::vector<Scalar> c);

  /// Build from sparse entries; missing entries are zero and each (i,j,k,v)
  /// also sets (j,i,k,-v). Conflicting duplicates are a structural error.
  static LieAlgebra from_brackets(int dim, std::vector<std::string> basis_names,
                                  const std::vector<BracketEntry>& entries);

  int dim() const { return dim_; }
  Mode mode() const { return mode_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  const Scalar& c(int i, int j, int k) const { return c_[idx(i, j, k)]; }
  Rat c_rat(int i, int j, int k) const { return c_[idx(i, j, k)].value(); }
  double c_d(int i, int j, int k) const { return cd_[idx(i, j, k)]; }

  std::vector<Rat> bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const;
  Vec bracket(const Vec& x, const Vec& y) const;

  bool is_abelian() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b);

private:
  std::size_t idx(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
  }
  int dim_;
  std::vector<std::string> names_;
  std::vector<Scalar> c_;
  std::vector<double> cd_;
  Mode mode_;
};

struct JacobiViolation {
  int i, j, k;     // offending triple (for Jacobi) or tensor entry (for antisymmetry)
  double residual; // max |component| of the defect
};

struct JacobiReport {
  bool ok = true;
  double max_residual = 0.0;
  std::vector<JacobiViolation> violations;
};

/// Antisymmetry plus the cyclic Jacobi identity on every basis triple.
/// Exact-mode algebras are tested with zero tolerance.
JacobiReport check_jacobi(const LieAlgebra& L, double tol = 0.0);

/// Derivation of L presented by its matrix in the chosen basis. The Leibniz
/// identity is the checked invariant, not a constructor guarantee.
struct Derivation {
  RatMat matrix;
};

bool is_derivation(const LieAlgebra& L, const RatMat& M);
/// Max Leibniz defect of a double matrix, for ODE-sampled derivation families.
double derivation_residual(const LieAlgebra& L, const Mat& M);

/// Inner derivation ad(x) = [x, .].
RatMat ad(const LieAlgebra& L, const std::vector<Rat>& x);
Mat ad_d(const LieAlgebra& L, const Vec& x);

/// Basis of the center, one column per basis vector.
RatMat center(const LieAlgebra& L);

// Catalog of standard algebras used throughout the tests and manifests.
LieAlgebra abelian(int n);
LieAlgebra so3();
LieAlgebra heisenberg3();
LieAlgebra sl2();
LieAlgebra aff1();
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

} // namespace liext
