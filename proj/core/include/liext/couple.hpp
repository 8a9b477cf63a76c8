#pragma once

#include "liext/cochain.hpp"

#include <optional>

namespace liext {

/// K-multivector valued form on the base: element of Lambda^p g_B* (x) Lambda^l K.
/// coeffs[P-rank] holds the Lambda^l K coordinates (canonical subset basis).
struct KValuedForm {
  int p = 0;
  int l = 1;
  std::vector<std::vector<Rat>> coeffs;

  static KValuedForm zero(int n_base, int n_kernel, int p, int l);
  double max_abs() const;
  bool is_exactly_zero() const;
};

/// The classification datum: a linear map into derivations of the kernel plus
/// a kernel-valued 2-form. Admissibility is a checked property, not a type
/// invariant, so non-admissible couples are representable.
class Couple {
public:
  Couple(LieAlgebra base, LieAlgebra kernel, std::vector<RatMat> D,
         std::vector<std::vector<Rat>> omega_upper);

  const LieAlgebra& base() const { return base_; }
  const LieAlgebra& kernel() const { return kernel_; }
  int n_base() const { return base_.dim(); }
  int n_kernel() const { return kernel_.dim(); }

  const RatMat& D(int i) const { return D_[i]; }
  const std::vector<RatMat>& D() const { return D_; }
  const Mat& D_d(int i) const { return Dd_[i]; }

  /// omega(e_i, e_j) as a kernel vector, antisymmetric in (i, j).
  std::vector<Rat> omega(int i, int j) const;
  const std::vector<std::vector<Rat>>& omega_upper() const { return omega_; }
  /// omega as a (p=2, l=1) form.
  KValuedForm omega_form() const;

  /// D along a sampled base direction, sum_i a_i D_i.
  Mat D_along(const Vec& a) const;
  /// omega(a, b) for double coefficient vectors.
  Vec omega_eval(const Vec& a, const Vec& b) const;

  Mode mode() const;

private:
  LieAlgebra base_, kernel_;
  std::vector<RatMat> D_;
  std::vector<std::vector<Rat>> omega_; // indexed by rank of {i<j} in subsets(n_base, 2)
  std::vector<Mat> Dd_;
  std::vector<Vec> omegad_;
};

/// Curv_D(e_i, e_j) = [D_i, D_j] - D_{[e_i, e_j]_B}, indexed like omega_upper.
std::vector<RatMat> curv_D(const Couple& cpl);

/// Covariant differential on K-multivector valued forms, with D acting on
/// Lambda^l K as the derivation extension.
KValuedForm covariant_differential(const Couple& cpl, const KValuedForm& theta);

struct AdmissibilityReport {
  bool closure_ok = true;
  double closure_residual = 0.0;
  bool curvature_ok = true;
  double curvature_residual = 0.0;
  bool ok() const { return closure_ok && curvature_ok; }
};

/// The two compatibility conditions: closure of omega under the covariant
/// differential, and Curv_D = ad o omega. Exact in exact mode.
AdmissibilityReport is_admissible(const Couple& cpl, double tol = 0.0);

/// Total algebra on K (+) g_B assembled from the split brackets; the kernel
/// block occupies the first n_K indices, horizontal lifts the last n_B.
struct ExtendedAlgebra {
  LieAlgebra total;
  int n_kernel;
  int n_base;
};

/// check_jacobi(build_extension(cpl).total) passes iff is_admissible(cpl) does.
ExtendedAlgebra build_extension(const Couple& cpl);

std::vector<Rat> project(const ExtendedAlgebra& ext, const std::vector<Rat>& v);
std::vector<Rat> inject(const ExtendedAlgebra& ext, const std::vector<Rat>& kappa);
std::vector<Rat> lift(const ExtendedAlgebra& ext, const std::vector<Rat>& alpha);
Vec project(const ExtendedAlgebra& ext, const Vec& v);
Vec vertical_part(const ExtendedAlgebra& ext, const Vec& v);
Vec inject(const ExtendedAlgebra& ext, const Vec& kappa);
Vec lift(const ExtendedAlgebra& ext, const Vec& alpha);

/// Linear map g_B -> K shifting the horizontal distribution.
struct GaugeTransform {
  RatMat Delta; // n_K x n_B
};

/// (D, omega) of the shifted connection: D' = D + ad o Delta,
/// omega' = omega + dH Delta + [Delta ^ Delta]_K. The coordinate change
/// (kappa, alpha) -> (kappa + Delta alpha, alpha) is then a bracket
/// isomorphism from the gauged extension onto the original one.
Couple apply_gauge(const Couple& cpl, const GaugeTransform& g);

enum class EquivalenceStatus { equivalent, not_equivalent, undecided };

struct EquivalenceResult {
  EquivalenceStatus status;
  std::optional<RatMat> delta; // witness when decided equivalent
  double residual = 0.0;       // max defect of a failed candidate check
};

/// With a candidate Delta: verify the two classification formulas exactly.
/// Without one, for abelian kernels with matching D the problem is linear
/// (solve dH Delta = omega2 - omega1); otherwise undecided.
EquivalenceResult are_equivalent(const Couple& a, const Couple& b,
                                 const std::optional<GaugeTransform>& candidate = std::nullopt);

/// Couple with omega = 0 from a curvature-free action by derivations.
Couple semidirect(const LieAlgebra& base, const LieAlgebra& kernel, const std::vector<RatMat>& D);

/// Central couple: abelian kernel R^n, trivial D, d-closed scalar 2-form.
Couple central(const LieAlgebra& base, int n, const std::vector<std::vector<Rat>>& omega_upper);

} // namespace liext
