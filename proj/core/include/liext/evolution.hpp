#pragma once

#include "liext/apath.hpp"
#include "liext/cochain.hpp"

namespace liext {

/// Raised when a quantity that should vanish up to integration error exceeds
/// its tolerance (CLI exit code 3 semantics).
class NumericalFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct EvolutionSolution {
  Grid beta;          // 4th-order stepping in t
  Grid beta_integral; // flow + quadrature route
  double dual_residual = 0.0;
};

/// Solve d alpha/d eps - d beta/d t = [alpha, beta] for beta, marching in t
/// from beta(t=0, eps) = beta0(eps). Both the stepping and the
/// integral-formula routes are computed; their max disagreement is reported.
EvolutionSolution solve_evolution(const LieAlgebra& alg, const Grid& alpha,
                                  const std::vector<Vec>& beta0);

/// Stepping route only (shared by the homotopy checks, where the terminal
/// slice is all that matters).
Grid solve_evolution_stepping(const LieAlgebra& alg, const Grid& alpha, const std::vector<Vec>& beta0);

/// Complete an a-grid to a discrete morphism by solving the same equation
/// for b with b(t=0, .) = 0.
Grid complete_to_morphism(const LieAlgebra& alg, const Grid& a);

struct HomotopyDecision {
  bool is_homotopy = false;
  double residual = 0.0; // max_eps |beta(t=1, eps)|
};

/// Homotopy condition: the solution with beta(t=0) = 0 has vanishing
/// terminal slice.
HomotopyDecision is_homotopy(const HomotopyGrid& g, double tol_ode = 1e-6);

/// Double-precision matrix representation for flow integration.
struct MatrixRep {
  int dim = 0;
  std::vector<Mat> rho;

  Mat of(const Vec& x) const;
  static MatrixRep from(const Representation& rep);
};

/// Faithfulness = injectivity of x -> rho(x); flagged through the kernel of
/// the flattened coefficient matrix.
bool is_faithful(const MatrixRep& rep, double tol = 1e-10);

/// Flow commutation of a couple (alpha, beta) satisfying the evolution
/// equation: integrates the four time-dependent flows in the representation
/// and returns the defect of
///   Phi^{X^eps}_{t,0} Phi^{Y^0}_{eps,0} = Phi^{Y^t}_{eps,0} Phi^{X^0}_{t,0}
/// at (t, eps) = (1, 1).
double verify_hgeom(const LieAlgebra& alg, const Grid& alpha, const Grid& beta, const MatrixRep& rep);

struct SphereThetaReport {
  std::vector<Grid> theta;    // one (t, eps) grid per u slice
  double boundary_residual = 0.0; // max |theta| on the t-boundary
  double pde_residual = 0.0;      // defect of d theta/dt - d alpha/du = [theta, alpha]
};

/// Sphere lemma: theta solves the eps-evolution driven by the u-derivative
/// of the b-family with theta(eps=0) = 0; it then satisfies the second
/// evolution equation and vanishes on the t-boundary.
SphereThetaReport sphere_theta(const ASphereFamily& family);

} // namespace liext
