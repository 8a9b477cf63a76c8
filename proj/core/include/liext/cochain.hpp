#pragma once

#include "liext/exterior.hpp"
#include "liext/lie_algebra.hpp"

#include <optional>

namespace liext {

/// Representation of L on a vector space of dimension m, given by the images
/// of the basis vectors.
struct Representation {
  int dim = 1;
  std::vector<RatMat> rho;
};

/// Exact check of rho([e_i,e_j]) = [rho_i, rho_j] on all basis pairs.
bool is_representation(const LieAlgebra& L, const Representation& rep);

/// Adjoint representation.
Representation adjoint_rep(const LieAlgebra& L);

/// Element of Lambda^k L* tensor V, coefficients indexed by the canonical
/// (lexicographic increasing k-subset, coefficient slot) basis.
class Cochain {
public:
  Cochain(int n, int degree, int coeff_dim = 1);

  int n() const { return n_; }
  int degree() const { return degree_; }
  int coeff_dim() const { return m_; }
  std::int64_t size() const { return static_cast<std::int64_t>(coeffs_.size()); }

  Scalar& at(std::int64_t subset_rank, int slot = 0) { return coeffs_[subset_rank * m_ + slot]; }
  const Scalar& at(std::int64_t subset_rank, int slot = 0) const { return coeffs_[subset_rank * m_ + slot]; }
  Scalar& at(const IndexSubset& s, int slot = 0) { return at(subset_rank(n_, s), slot); }
  const Scalar& at(const IndexSubset& s, int slot = 0) const { return at(subset_rank(n_, s), slot); }

  std::vector<Rat> flat() const;
  static Cochain from_flat(int n, int degree, int coeff_dim, const std::vector<Rat>& v);

private:
  int n_, degree_, m_;
  std::vector<Scalar> coeffs_;
};

/// Matrix of d : C^k -> C^{k+1} in the canonical bases. With no
/// representation the coefficients are trivial scalars and the
/// Lie-derivative terms drop; with one they become the action terms.
RatMat ce_differential(const LieAlgebra& L, const std::optional<Representation>& rep, int k);

/// Betti numbers b_0..b_n. Exact-mode algebras use rational ranks; approx
/// mode uses SVD ranks with the 1e-10 relative threshold.
std::vector<int> cohomology_dims(const LieAlgebra& L, const std::optional<Representation>& rep = std::nullopt);

/// Matrix of the derivation extension of D to Lambda^l R^n:
/// D(v_1 ^ ... ^ v_l) = sum_i v_1 ^ ... ^ D v_i ^ ... ^ v_l.
RatMat exterior_power_action(const RatMat& D, int n, int l);

/// Dual action on Lambda^l (R^n)*: <D* theta, w> = -<theta, D w>.
RatMat exterior_power_coaction(const RatMat& D, int n, int l);

} // namespace liext
