#pragma once

#include "liext/couple.hpp"

#include <array>

namespace liext {

/// Element of Lambda^p g_B* (x) Lambda^q K*, coefficients indexed by
/// (base subset, kernel subset) pairs in lexicographic order.
struct BigradedCochain {
  int p = 0, q = 0;
  std::vector<std::vector<Rat>> coeffs; // [P-rank][Q-rank]

  static BigradedCochain zero(int n_base, int n_kernel, int p, int q);
  double max_abs() const;
  bool is_exactly_zero() const;

  /// P-major flattening, matching the delta matrices.
  std::vector<Rat> flat() const;
  static BigradedCochain from_flat(int n_base, int n_kernel, int p, int q, const std::vector<Rat>& v);
};

/// Components theta^{p,q} of a total cochain under the connection splitting:
/// theta^{p,q}(v_1..v_p; w_1..w_q) = Theta(h(v_1)..h(v_p), w_1..w_q).
std::vector<BigradedCochain> decompose(const ExtendedAlgebra& ext, const Cochain& Theta);

/// Exact inverse of decompose.
Cochain recompose(const ExtendedAlgebra& ext, const std::vector<BigradedCochain>& components);

// The three components of the total differential in the bigraded picture,
// as matrices on the P-major flattened coordinates.
RatMat delta01_matrix(const Couple& cpl, int p, int q); // (p, q) -> (p, q+1): (-1)^p d_K
RatMat delta10_matrix(const Couple& cpl, int p, int q); // (p, q) -> (p+1, q): covariant derivative
RatMat delta21_matrix(const Couple& cpl, int p, int q); // (p, q) -> (p+2, q-1): omega insertion

BigradedCochain delta01(const Couple& cpl, const BigradedCochain& theta);
BigradedCochain delta10(const Couple& cpl, const BigradedCochain& theta);
BigradedCochain delta21(const Couple& cpl, const BigradedCochain& theta); // q >= 1

/// Exhaustive check of d_total = delta01 + delta10 + delta21 on the full
/// degree-k cochain basis; returns the max defect (exactly 0.0 on exact
/// couples when the identity holds).
double verify_sum_decomposition(const ExtendedAlgebra& ext, const Couple& cpl, int k);

/// The five anticommutation relations among the three components, checked on
/// full bases in every valid bidegree. Order:
///   dK dK, dK dH + dH dK, dK dW + dH dH + dW dK, dH dW + dW dH, dW dW.
std::array<double, 5> verify_relations(const Couple& cpl);

} // namespace liext
