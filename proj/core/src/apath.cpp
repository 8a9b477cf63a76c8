#include "liext/apath.hpp"

#include <cmath>
#include <numbers>

namespace liext {

APath::APath(LieAlgebra alg, std::vector<Vec> s) : algebra(std::move(alg)), samples(std::move(s)) {
  if (samples.size() < 2) throw ContractViolation("a path needs at least two samples");
  for (const Vec& v : samples)
    if (v.size() != algebra.dim()) throw ContractViolation("path sample length mismatch");
}

APath APath::zero(const LieAlgebra& alg, int N) {
  return APath(alg, std::vector<Vec>(N + 1, Vec::Zero(alg.dim())));
}

APath APath::sampled(const LieAlgebra& alg, int N, const std::function<Vec(double)>& f) {
  std::vector<Vec> s;
  s.reserve(N + 1);
  for (int i = 0; i <= N; ++i) s.push_back(f(static_cast<double>(i) / N));
  return APath(alg, std::move(s));
}

Grid sampled_grid(int dim, int N, int M, const std::function<Vec(double, double)>& f) {
  Grid g(N + 1, std::vector<Vec>(M + 1, Vec::Zero(dim)));
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= M; ++j) g[i][j] = f(static_cast<double>(i) / N, static_cast<double>(j) / M);
  return g;
}

std::vector<Vec> grid_column(const Grid& g, int j) {
  std::vector<Vec> out;
  out.reserve(g.size());
  for (const auto& row : g) out.push_back(row[j]);
  return out;
}

std::vector<Vec> grid_row(const Grid& g, int i) { return g[i]; }

double default_tol_grid(int N, int M) {
  double h = std::max(1.0 / N, 1.0 / M);
  return 1e-4 * h * h;
}

double morphism_residual(const LieAlgebra& alg, const Grid& a, const Grid& b) {
  const int N = static_cast<int>(a.size()) - 1;
  const int M = static_cast<int>(a[0].size()) - 1;
  const double ht = 1.0 / N, he = 1.0 / M;
  double worst = 0.0;
  for (int j = 0; j <= M; ++j) {
    auto bcol = grid_column(b, j);
    for (int i = 0; i <= N; ++i) {
      Vec da_de = central_difference(a[i], j, he);
      Vec db_dt = central_difference(bcol, i, ht);
      Vec defect = da_de - db_dt - alg.bracket(a[i][j], b[i][j]);
      worst = std::max(worst, defect.lpNorm<Eigen::Infinity>());
    }
  }
  return worst;
}

HomotopyGrid::HomotopyGrid(LieAlgebra alg, Grid a_, Grid b_, double tol)
    : algebra(std::move(alg)), a(std::move(a_)), b(std::move(b_)), tol_grid(tol) {}

HomotopyGrid HomotopyGrid::make(LieAlgebra alg, Grid a, Grid b, std::optional<double> tol) {
  if (a.size() < 2 || a[0].size() < 2) throw ContractViolation("grid needs at least 2x2 samples");
  if (b.size() != a.size() || b[0].size() != a[0].size())
    throw ContractViolation("grid shape mismatch");
  for (const auto& row : a)
    for (const Vec& v : row)
      if (v.size() != alg.dim()) throw ContractViolation("grid sample length mismatch");
  int N = static_cast<int>(a.size()) - 1, M = static_cast<int>(a[0].size()) - 1;
  double t = tol.value_or(default_tol_grid(N, M));
  double r = morphism_residual(alg, a, b);
  if (r > t)
    throw ContractViolation("grid is not a discrete morphism: residual " + format_double(r) +
                            " exceeds tol_grid " + format_double(t));
  return HomotopyGrid(std::move(alg), std::move(a), std::move(b), t);
}

ASphere ASphere::make(HomotopyGrid g) {
  const int N = g.N(), M = g.M();
  for (int i = 0; i <= N; ++i)
    if (g.a[i][0].lpNorm<Eigen::Infinity>() != 0.0 || g.a[i][M].lpNorm<Eigen::Infinity>() != 0.0)
      throw ContractViolation("sphere a-grid must vanish at the eps boundary");
  for (int j = 0; j <= M; ++j)
    if (g.b[0][j].lpNorm<Eigen::Infinity>() != 0.0 || g.b[N][j].lpNorm<Eigen::Infinity>() != 0.0)
      throw ContractViolation("sphere b-grid must vanish at the t boundary");
  return ASphere{std::move(g)};
}

double flatten_tau(double t) { return t - std::sin(2 * std::numbers::pi * t) / (2 * std::numbers::pi); }
double flatten_tau_prime(double t) { return 1.0 - std::cos(2 * std::numbers::pi * t); }

APath concatenate(const APath& a1, const APath& a2) {
  if (!(a1.algebra == a2.algebra)) throw ContractViolation("concatenation across different algebras");
  const int N = a1.N() + a2.N();
  std::vector<Vec> out;
  out.reserve(N + 1);
  for (int i = 0; i <= N; ++i) {
    double t = static_cast<double>(i) / N;
    Vec v;
    if (t <= 0.5) {
      double u = 2 * t;
      v = 2 * flatten_tau_prime(u) * a1.at(flatten_tau(u));
    } else {
      double u = 2 * t - 1;
      v = 2 * flatten_tau_prime(u) * a2.at(flatten_tau(u));
    }
    out.push_back(std::move(v));
  }
  return APath(a1.algebra, std::move(out));
}

APath reverse(const APath& a) {
  std::vector<Vec> out(a.samples.size());
  const int N = a.N();
  for (int i = 0; i <= N; ++i) out[i] = -a.samples[N - i];
  return APath(a.algebra, std::move(out));
}

} // namespace liext
