#pragma once

#include "liext/apath.hpp"
#include "liext/couple.hpp"
#include "liext/evolution.hpp"

namespace liext {

/// Kernel automorphism obtained by flowing D along a base path.
struct Transport {
  Mat phi;
  double t0 = 0.0, t1 = 1.0;
};

/// Phi' = D_{a_B(s)} Phi from the identity, fixed-step 4th order.
Transport parallel_transport(const Couple& cpl, const APath& a_B, double t = 1.0, int steps = 512);

/// Defect of the Lie algebroid morphism property |Phi[x,y] - [Phi x, Phi y]|
/// over kernel basis pairs.
double transport_bracket_residual(const Couple& cpl, const Mat& phi);

/// Forward and inverse transports along a sampled base path at the path's own
/// resolution, with half-node values for quadrature reuse.
struct TransportTables {
  std::vector<Mat> F, Fh; // Phi_{t,0} at nodes / half nodes
  std::vector<Mat> G, Gh; // Phi_{0,t} = Phi_{t,0}^{-1}
};
TransportTables transport_tables(const Couple& cpl, const std::vector<Vec>& a_B_samples);

/// A total path split into its base shadow and the transported kernel part.
struct SplitPath {
  APath a_B; // over g_B
  APath a_K; // over K
};

/// a_K(t) = Phi_{t,0}^{-1} (vertical part of a(t)).
SplitPath split_path(const Couple& cpl, const APath& a_total);
APath unsplit(const Couple& cpl, const SplitPath& sp);

/// Concatenation through the splitting: (sp2 after sp1) has base part
/// a2_B . a1_B and kernel part (Phi_{a1_B}^{-1} a2_K) . a1_K.
SplitPath concat_split(const Couple& cpl, const SplitPath& sp1, const SplitPath& sp2);

/// K-path representative of a monodromy element; the group element is
/// integrated from g' = rho(kpath) g when a faithful representation is given.
struct MonodromyElement {
  APath kpath;
  std::optional<Mat> group_element;
};

/// The boundary operator of the integration theorem on a base homotopy:
/// eps -> integral_0^1 Phi_{0,s}( omega(a,b)_{s,eps} ) ds.
MonodromyElement monodromy_partial(const Couple& cpl, const HomotopyGrid& h_B,
                                   const std::optional<MatrixRep>& rep = std::nullopt);

struct SplitHomotopyReport {
  bool ok = false;
  double residual = 0.0;
};

/// A split family (a_B^eps, a_K^eps) is a homotopy upstairs iff the terminal
/// slice of the kernel evolution matches the transported-curvature integral.
SplitHomotopyReport split_homotopy_check(const Couple& cpl, const HomotopyGrid& base,
                                         const Grid& a_K, double tol_ode = 1e-6);

struct ConnectingResult {
  MonodromyElement element;
  double horizontal_leak = 0.0; // max horizontal component of the terminal path
};

/// Connecting homomorphism on base spheres: solve the lifted evolution driven
/// by h(b) and read off the eps = 1 slice, which must lie in the kernel.
/// Horizontal leakage above tol_ode raises NumericalFailure.
ConnectingResult connecting_partial2(const Couple& cpl, const ASphere& s,
                                     const std::optional<MatrixRep>& rep = std::nullopt,
                                     double tol_ode = 1e-6);

/// eps-direction concatenation of composable homotopies, flattened at the
/// seam by the shared tau map. The declared tolerance of the result is the
/// measured residual of the reglued grid.
HomotopyGrid concat_homotopies(const HomotopyGrid& h1, const HomotopyGrid& h2);

/// Cocycle property of the boundary operator: group element of the
/// concatenated homotopy against the product of the halves' group elements.
double cocycle_check(const Couple& cpl, const HomotopyGrid& h1, const HomotopyGrid& h2,
                     const MatrixRep& rep);

} // namespace liext
