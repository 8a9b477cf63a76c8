#include "liext/evolution.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace liext {

namespace {

void check_grid_shape(const Grid& g) {
  if (g.size() < 2 || g[0].size() < 2) throw ContractViolation("grid needs at least 2x2 samples");
  for (const auto& row : g)
    if (row.size() != g[0].size()) throw ContractViolation("ragged grid");
}

} // namespace

Grid solve_evolution_stepping(const LieAlgebra& alg, const Grid& alpha, const std::vector<Vec>& beta0) {
  check_grid_shape(alpha);
  const int N = static_cast<int>(alpha.size()) - 1;
  const int M = static_cast<int>(alpha[0].size()) - 1;
  if (static_cast<int>(beta0.size()) != M + 1)
    throw ContractViolation("initial slice length mismatch");
  const double h = 1.0 / N;

  Grid dadeps(N + 1);
  for (int i = 0; i <= N; ++i) dadeps[i] = differentiate_samples(alpha[i], 1.0 / M);

  Grid beta(N + 1, std::vector<Vec>(M + 1));
  for (int j = 0; j <= M; ++j) {
    SampledVec acol(grid_column(alpha, j));
    SampledVec dcol(grid_column(dadeps, j));
    auto rhs = [&](double t, const Vec& y) { return Vec(dcol.at(t) - alg.bracket(acol.at(t), y)); };
    Vec y = beta0[j];
    beta[0][j] = y;
    for (int i = 0; i < N; ++i) {
      y = rk4_step(rhs, i * h, h, y);
      beta[i + 1][j] = y;
    }
  }
  return beta;
}

EvolutionSolution solve_evolution(const LieAlgebra& alg, const Grid& alpha,
                                  const std::vector<Vec>& beta0) {
  EvolutionSolution out;
  out.beta = solve_evolution_stepping(alg, alpha, beta0);

  check_grid_shape(alpha);
  const int N = static_cast<int>(alpha.size()) - 1;
  const int M = static_cast<int>(alpha[0].size()) - 1;
  const int n = alg.dim();
  const double h = 1.0 / N;

  Grid dadeps(N + 1);
  for (int i = 0; i <= N; ++i) dadeps[i] = differentiate_samples(alpha[i], 1.0 / M);

  out.beta_integral.assign(N + 1, std::vector<Vec>(M + 1));
  for (int j = 0; j <= M; ++j) {
    SampledVec acol(grid_column(alpha, j));
    // the section pushforward along the flow of [alpha, .] integrates -ad
    auto A = [&](double t) { return Mat(-ad_d(alg, acol.at(t))); };
    FlowPairTable fp = flow_pair_table(A, n, h, N);
    auto dcol = grid_column(dadeps, j);
    Vec acc = Vec::Zero(n);
    out.beta_integral[0][j] = beta0[j];
    for (int i = 0; i < N; ++i) {
      Vec g0 = fp.G[i] * dcol[i];
      Vec gh = fp.Gh[i] * Vec(0.5 * (dcol[i] + dcol[i + 1]));
      Vec g1 = fp.G[i + 1] * dcol[i + 1];
      acc += (h / 6.0) * (g0 + 4 * gh + g1);
      out.beta_integral[i + 1][j] = fp.F[i + 1] * Vec(acc + beta0[j]);
    }
  }

  double worst = 0.0;
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= M; ++j)
      worst = std::max(worst, (out.beta[i][j] - out.beta_integral[i][j]).lpNorm<Eigen::Infinity>());
  out.dual_residual = worst;
  return out;
}

Grid complete_to_morphism(const LieAlgebra& alg, const Grid& a) {
  check_grid_shape(a);
  return solve_evolution_stepping(alg, a, std::vector<Vec>(a[0].size(), Vec::Zero(alg.dim())));
}

HomotopyDecision is_homotopy(const HomotopyGrid& g, double tol_ode) {
  const int M = g.M(), N = g.N();
  Grid beta = solve_evolution_stepping(g.algebra, g.a, std::vector<Vec>(M + 1, Vec::Zero(g.algebra.dim())));
  double worst = 0.0;
  for (int j = 0; j <= M; ++j) worst = std::max(worst, beta[N][j].lpNorm<Eigen::Infinity>());
  return {worst <= tol_ode, worst};
}

Mat MatrixRep::of(const Vec& x) const {
  Mat m = Mat::Zero(dim, dim);
  for (std::size_t k = 0; k < rho.size(); ++k)
    if (x[static_cast<int>(k)] != 0.0) m += x[static_cast<int>(k)] * rho[k];
  return m;
}

MatrixRep MatrixRep::from(const Representation& rep) {
  MatrixRep out;
  out.dim = rep.dim;
  for (const RatMat& r : rep.rho) {
    Mat m(r.rows(), r.cols());
    for (int i = 0; i < r.rows(); ++i)
      for (int j = 0; j < r.cols(); ++j) m(i, j) = r(i, j).convert_to<double>();
    out.rho.push_back(std::move(m));
  }
  return out;
}

bool is_faithful(const MatrixRep& rep, double tol) {
  const int n = static_cast<int>(rep.rho.size());
  if (n == 0) return false;
  Mat flat(rep.dim * rep.dim, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < rep.dim; ++i)
      for (int j = 0; j < rep.dim; ++j) flat(i * rep.dim + j, k) = rep.rho[k](i, j);
  Eigen::JacobiSVD<Mat> svd(flat);
  const auto& s = svd.singularValues();
  if (s.size() < n) return false;
  return s(n - 1) > tol * s(0);
}

double verify_hgeom(const LieAlgebra& alg, const Grid& alpha, const Grid& beta, const MatrixRep& rep) {
  check_grid_shape(alpha);
  check_grid_shape(beta);
  if (alpha.size() != beta.size() || alpha[0].size() != beta[0].size())
    throw ContractViolation("alpha and beta grids must share a shape");
  if (static_cast<int>(rep.rho.size()) != alg.dim() || !is_faithful(rep))
    throw ContractViolation("representation is missing directions (not faithful)");
  const int N = static_cast<int>(alpha.size()) - 1;
  const int M = static_cast<int>(alpha[0].size()) - 1;
  const int m = rep.dim;

  auto flow_of = [&](const std::vector<Vec>& samples, int steps) {
    SampledVec s(samples);
    return flow_endpoint([&](double t) { return rep.of(s.at(t)); }, Mat::Identity(m, m), 0.0, 1.0, steps);
  };

  Mat M_t = flow_of(grid_column(alpha, M), N);  // Phi^{X^eps=1}_{1,0}
  Mat N_e = flow_of(beta[0], M);                // Phi^{Y^t=0}_{1,0}
  Mat P_e = flow_of(beta[N], M);                // Phi^{Y^t=1}_{1,0}
  Mat Q_t = flow_of(grid_column(alpha, 0), N);  // Phi^{X^eps=0}_{1,0}

  return (M_t * N_e - P_e * Q_t).lpNorm<Eigen::Infinity>();
}

SphereThetaReport sphere_theta(const ASphereFamily& family) {
  if (family.slices.size() < 2) throw ContractViolation("sphere family needs at least two u slices");
  const int L = family.L();
  const auto& g0 = family.slices[0].grid;
  const int N = g0.N(), M = g0.M();
  const int n = g0.algebra.dim();
  for (const auto& s : family.slices)
    if (s.grid.N() != N || s.grid.M() != M || !(s.grid.algebra == g0.algebra))
      throw ContractViolation("sphere family slices must share shape and algebra");
  const double hu = 1.0 / L, ht = 1.0 / N, he = 1.0 / M;

  // u-derivative of the b family at every grid node
  std::vector<Grid> dbdu(L + 1, Grid(N + 1, std::vector<Vec>(M + 1)));
  {
    std::vector<Vec> stack(L + 1);
    for (int i = 0; i <= N; ++i)
      for (int j = 0; j <= M; ++j) {
        for (int l = 0; l <= L; ++l) stack[l] = family.slices[l].grid.b[i][j];
        auto d = differentiate_samples(stack, hu);
        for (int l = 0; l <= L; ++l) dbdu[l][i][j] = d[l];
      }
  }

  SphereThetaReport rep;
  rep.theta.assign(L + 1, Grid(N + 1, std::vector<Vec>(M + 1)));
  const LieAlgebra& alg = g0.algebra;
  for (int l = 0; l <= L; ++l) {
    const Grid& b = family.slices[l].grid.b;
    for (int i = 0; i <= N; ++i) {
      SampledVec brow(b[i]);
      SampledVec drow(dbdu[l][i]);
      auto rhs = [&](double e, const Vec& y) { return Vec(drow.at(e) + alg.bracket(y, brow.at(e))); };
      Vec y = Vec::Zero(n);
      rep.theta[l][i][0] = y;
      for (int j = 0; j < M; ++j) {
        y = rk4_step(rhs, j * he, he, y);
        rep.theta[l][i][j + 1] = y;
      }
    }
  }

  for (int l = 0; l <= L; ++l)
    for (int j = 0; j <= M; ++j) {
      rep.boundary_residual = std::max(rep.boundary_residual, rep.theta[l][0][j].lpNorm<Eigen::Infinity>());
      rep.boundary_residual = std::max(rep.boundary_residual, rep.theta[l][N][j].lpNorm<Eigen::Infinity>());
    }

  // second evolution equation, central differences at interior t and u nodes
  for (int l = 1; l < L; ++l)
    for (int i = 1; i < N; ++i)
      for (int j = 0; j <= M; ++j) {
        Vec dtheta_dt = (rep.theta[l][i + 1][j] - rep.theta[l][i - 1][j]) / (2 * ht);
        Vec dalpha_du =
            (family.slices[l + 1].grid.a[i][j] - family.slices[l - 1].grid.a[i][j]) / (2 * hu);
        Vec defect = dtheta_dt - dalpha_du -
                     alg.bracket(rep.theta[l][i][j], family.slices[l].grid.a[i][j]);
        rep.pde_residual = std::max(rep.pde_residual, defect.lpNorm<Eigen::Infinity>());
      }
  return rep;
}

} // namespace liext
