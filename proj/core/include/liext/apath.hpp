#pragma once

#include "liext/lie_algebra.hpp"
#include "liext/ode.hpp"

namespace liext {

/// Sampled map I -> A on the uniform grid t_i = i/N.
struct APath {
  LieAlgebra algebra;
  std::vector<Vec> samples; // N+1 entries of length dim

  APath(LieAlgebra alg, std::vector<Vec> s);
  int N() const { return static_cast<int>(samples.size()) - 1; }
  Vec at(double t) const { return SampledVec(samples).at(t); }

  static APath zero(const LieAlgebra& alg, int N);
  static APath sampled(const LieAlgebra& alg, int N, const std::function<Vec(double)>& f);
};

/// (t_i, eps_j) indexed samples; [i][j] with i the t index.
using Grid = std::vector<std::vector<Vec>>;

Grid sampled_grid(int dim, int N, int M, const std::function<Vec(double, double)>& f);
std::vector<Vec> grid_column(const Grid& g, int j); // fixed eps, varying t
std::vector<Vec> grid_row(const Grid& g, int i);    // fixed t, varying eps

/// The declared tolerance for the discrete morphism condition,
/// 1e-4 * (max grid spacing)^2.
double default_tol_grid(int N, int M);

/// Pair of grids a dt + b deps forming a discrete algebroid morphism
/// TI^2 -> A: the residual of d_eps a - d_t b = [a, b] (central differences,
/// one-sided at the edges) stays within tol_grid.
struct HomotopyGrid {
  LieAlgebra algebra;
  Grid a, b;
  double tol_grid;

  static HomotopyGrid make(LieAlgebra alg, Grid a, Grid b, std::optional<double> tol = std::nullopt);
  int N() const { return static_cast<int>(a.size()) - 1; }
  int M() const { return static_cast<int>(a[0].size()) - 1; }

private:
  HomotopyGrid(LieAlgebra alg, Grid a_, Grid b_, double tol);
};

/// Max norm of d_eps a - d_t b - [a, b] over the grid.
double morphism_residual(const LieAlgebra& alg, const Grid& a, const Grid& b);

/// Grid with a(., eps=0) = a(., eps=1) = 0 and b(t=0, .) = b(t=1, .) = 0,
/// exactly at the boundary nodes.
struct ASphere {
  HomotopyGrid grid;
  static ASphere make(HomotopyGrid g);
};

/// Uniform u-family of spheres (the sphere lemma's extra parameter).
struct ASphereFamily {
  std::vector<ASphere> slices; // u_l = l/L
  int L() const { return static_cast<int>(slices.size()) - 1; }
};

/// Endpoint-flattening reparametrization used for all concatenations.
double flatten_tau(double t);
double flatten_tau_prime(double t);

/// Concatenation: each half is reparametrized by tau before gluing, so the
/// result is smooth across the seam. Output has N1 + N2 samples.
APath concatenate(const APath& a1, const APath& a2);

/// reverse(a)(t) = -a(1 - t), exact on samples.
APath reverse(const APath& a);

} // namespace liext
