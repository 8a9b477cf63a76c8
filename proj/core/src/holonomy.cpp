#include "liext/holonomy.hpp"

#include <cmath>

namespace liext {

namespace {

Mat rep_flow(const MatrixRep& rep, const std::vector<Vec>& kpath_samples) {
  SampledVec k(kpath_samples);
  const int M = static_cast<int>(kpath_samples.size()) - 1;
  return flow_endpoint([&](double e) { return rep.of(k.at(e)); }, Mat::Identity(rep.dim, rep.dim),
                       0.0, 1.0, M);
}

std::optional<Mat> maybe_group_element(const std::optional<MatrixRep>& rep, int n_kernel,
                                       const std::vector<Vec>& kpath) {
  if (!rep) return std::nullopt;
  if (static_cast<int>(rep->rho.size()) != n_kernel || !is_faithful(*rep))
    throw ContractViolation("kernel representation is missing directions (not faithful)");
  return rep_flow(*rep, kpath);
}

} // namespace

Transport parallel_transport(const Couple& cpl, const APath& a_B, double t, int steps) {
  if (!(a_B.algebra == cpl.base())) throw ContractViolation("path does not live over the couple's base");
  if (t < 0.0 || t > 1.0) throw ContractViolation("transport time outside [0,1]");
  SampledVec a(a_B.samples);
  Mat phi = flow_endpoint([&](double s) { return cpl.D_along(a.at(s)); },
                          Mat::Identity(cpl.n_kernel(), cpl.n_kernel()), 0.0, t, steps);
  return Transport{std::move(phi), 0.0, t};
}

double transport_bracket_residual(const Couple& cpl, const Mat& phi) {
  const LieAlgebra& K = cpl.kernel();
  const int n = K.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec lhs = phi * K.bracket(Vec(Vec::Unit(n, i)), Vec(Vec::Unit(n, j)));
      Vec rhs = K.bracket(Vec(phi.col(i)), Vec(phi.col(j)));
      worst = std::max(worst, (lhs - rhs).lpNorm<Eigen::Infinity>());
    }
  return worst;
}

TransportTables transport_tables(const Couple& cpl, const std::vector<Vec>& a_B_samples) {
  const int N = static_cast<int>(a_B_samples.size()) - 1;
  SampledVec a(a_B_samples);
  FlowPairTable fp = flow_pair_table([&](double s) { return cpl.D_along(a.at(s)); },
                                     cpl.n_kernel(), 1.0 / N, N);
  return TransportTables{std::move(fp.F), std::move(fp.Fh), std::move(fp.G), std::move(fp.Gh)};
}

SplitPath split_path(const Couple& cpl, const APath& a_total) {
  const int nk = cpl.n_kernel(), nb = cpl.n_base();
  if (a_total.algebra.dim() != nk + nb)
    throw ContractViolation("total path dimension does not match the couple");
  const int N = a_total.N();
  std::vector<Vec> aB(N + 1), aK(N + 1);
  for (int i = 0; i <= N; ++i) aB[i] = a_total.samples[i].tail(nb);
  TransportTables tt = transport_tables(cpl, aB);
  for (int i = 0; i <= N; ++i) aK[i] = tt.G[i] * a_total.samples[i].head(nk);
  return SplitPath{APath(cpl.base(), std::move(aB)), APath(cpl.kernel(), std::move(aK))};
}

APath unsplit(const Couple& cpl, const SplitPath& sp) {
  if (sp.a_B.N() != sp.a_K.N()) throw ContractViolation("split path components disagree on resolution");
  const int nk = cpl.n_kernel(), nb = cpl.n_base(), N = sp.a_B.N();
  TransportTables tt = transport_tables(cpl, sp.a_B.samples);
  std::vector<Vec> total(N + 1);
  for (int i = 0; i <= N; ++i) {
    Vec v(nk + nb);
    v.head(nk) = tt.F[i] * sp.a_K.samples[i];
    v.tail(nb) = sp.a_B.samples[i];
    total[i] = std::move(v);
  }
  ExtendedAlgebra ext = build_extension(cpl);
  return APath(ext.total, std::move(total));
}

SplitPath concat_split(const Couple& cpl, const SplitPath& sp1, const SplitPath& sp2) {
  TransportTables tt = transport_tables(cpl, sp1.a_B.samples);
  const Mat& hol_inv = tt.G.back(); // Phi_{a1_B}^{-1} = Phi_{0,1}
  std::vector<Vec> shifted(sp2.a_K.samples.size());
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] = hol_inv * sp2.a_K.samples[i];
  APath a2K_shifted(cpl.kernel(), std::move(shifted));
  return SplitPath{concatenate(sp1.a_B, sp2.a_B), concatenate(sp1.a_K, a2K_shifted)};
}

MonodromyElement monodromy_partial(const Couple& cpl, const HomotopyGrid& h_B,
                                   const std::optional<MatrixRep>& rep) {
  if (!(h_B.algebra == cpl.base())) throw ContractViolation("homotopy does not live over the couple's base");
  const int N = h_B.N(), M = h_B.M();
  const double h = 1.0 / N;
  std::vector<Vec> kpath(M + 1);
  for (int j = 0; j <= M; ++j) {
    auto acol = grid_column(h_B.a, j);
    auto bcol = grid_column(h_B.b, j);
    TransportTables tt = transport_tables(cpl, acol);
    Vec acc = Vec::Zero(cpl.n_kernel());
    for (int i = 0; i < N; ++i) {
      Vec g0 = tt.G[i] * cpl.omega_eval(acol[i], bcol[i]);
      Vec gh = tt.Gh[i] * cpl.omega_eval(Vec(0.5 * (acol[i] + acol[i + 1])),
                                         Vec(0.5 * (bcol[i] + bcol[i + 1])));
      Vec g1 = tt.G[i + 1] * cpl.omega_eval(acol[i + 1], bcol[i + 1]);
      acc += (h / 6.0) * (g0 + 4 * gh + g1);
    }
    kpath[j] = acc;
  }
  auto g = maybe_group_element(rep, cpl.n_kernel(), kpath);
  return MonodromyElement{APath(cpl.kernel(), std::move(kpath)), std::move(g)};
}

SplitHomotopyReport split_homotopy_check(const Couple& cpl, const HomotopyGrid& base,
                                         const Grid& a_K, double tol_ode) {
  const int N = base.N(), M = base.M();
  if (static_cast<int>(a_K.size()) != N + 1 || static_cast<int>(a_K[0].size()) != M + 1)
    throw ContractViolation("kernel family shape mismatch");
  Grid mu = solve_evolution_stepping(cpl.kernel(), a_K,
                                     std::vector<Vec>(M + 1, Vec::Zero(cpl.n_kernel())));
  MonodromyElement target = monodromy_partial(cpl, base);
  double worst = 0.0;
  for (int j = 0; j <= M; ++j)
    worst = std::max(worst, (mu[N][j] - target.kpath.samples[j]).lpNorm<Eigen::Infinity>());
  return SplitHomotopyReport{worst <= tol_ode, worst};
}

ConnectingResult connecting_partial2(const Couple& cpl, const ASphere& s,
                                     const std::optional<MatrixRep>& rep, double tol_ode) {
  const HomotopyGrid& g = s.grid;
  if (!(g.algebra == cpl.base())) throw ContractViolation("sphere does not live over the couple's base");
  const int N = g.N(), M = g.M();
  const int nk = cpl.n_kernel(), nb = cpl.n_base();
  ExtendedAlgebra ext = build_extension(cpl);
  const double he = 1.0 / M;

  // t-derivative of the b-grid
  Grid dbdt(N + 1, std::vector<Vec>(M + 1));
  for (int j = 0; j <= M; ++j) {
    auto col = differentiate_samples(grid_column(g.b, j), 1.0 / N);
    for (int i = 0; i <= N; ++i) dbdt[i][j] = col[i];
  }

  std::vector<Vec> kpath(N + 1);
  double leak = 0.0;
  for (int i = 0; i <= N; ++i) {
    SampledVec brow(g.b[i]);
    SampledVec drow(dbdt[i]);
    auto rhs = [&](double e, const Vec& y) {
      return Vec(lift(ext, drow.at(e)) + ext.total.bracket(y, lift(ext, brow.at(e))));
    };
    Vec y = Vec::Zero(nk + nb);
    for (int j = 0; j < M; ++j) y = rk4_step(rhs, j * he, he, y);
    leak = std::max(leak, y.tail(nb).lpNorm<Eigen::Infinity>());
    kpath[i] = y.head(nk);
  }
  if (leak > tol_ode)
    throw NumericalFailure("connecting homomorphism left the kernel: leak " + format_double(leak));
  auto ge = maybe_group_element(rep, nk, kpath);
  return ConnectingResult{MonodromyElement{APath(cpl.kernel(), std::move(kpath)), std::move(ge)}, leak};
}

HomotopyGrid concat_homotopies(const HomotopyGrid& h1, const HomotopyGrid& h2) {
  if (!(h1.algebra == h2.algebra)) throw ContractViolation("homotopies over different algebras");
  if (h1.N() != h2.N()) throw ContractViolation("homotopies disagree on t resolution");
  const int N = h1.N(), M1 = h1.M(), M2 = h2.M(), M = M1 + M2;
  for (int i = 0; i <= N; ++i)
    if ((h1.a[i][M1] - h2.a[i][0]).lpNorm<Eigen::Infinity>() != 0.0)
      throw ContractViolation("homotopies are not composable (terminal and initial paths differ)");

  const int dim = h1.algebra.dim();
  Grid a(N + 1, std::vector<Vec>(M + 1, Vec::Zero(dim)));
  Grid b(N + 1, std::vector<Vec>(M + 1, Vec::Zero(dim)));
  for (int i = 0; i <= N; ++i) {
    SampledVec a1(h1.a[i]), b1(h1.b[i]), a2(h2.a[i]), b2(h2.b[i]);
    for (int j = 0; j <= M; ++j) {
      double e = static_cast<double>(j) / M;
      if (e <= 0.5) {
        double u = 2 * e;
        a[i][j] = a1.at(flatten_tau(u));
        b[i][j] = 2 * flatten_tau_prime(u) * b1.at(flatten_tau(u));
      } else {
        double u = 2 * e - 1;
        a[i][j] = a2.at(flatten_tau(u));
        b[i][j] = 2 * flatten_tau_prime(u) * b2.at(flatten_tau(u));
      }
    }
  }
  double r = morphism_residual(h1.algebra, a, b);
  return HomotopyGrid::make(h1.algebra, std::move(a), std::move(b), r);
}

double cocycle_check(const Couple& cpl, const HomotopyGrid& h1, const HomotopyGrid& h2,
                     const MatrixRep& rep) {
  HomotopyGrid joined = concat_homotopies(h1, h2);
  MatrixRep r = rep;
  auto g1 = monodromy_partial(cpl, h1, r).group_element;
  auto g2 = monodromy_partial(cpl, h2, r).group_element;
  auto gc = monodromy_partial(cpl, joined, r).group_element;
  return (*gc - (*g2) * (*g1)).lpNorm<Eigen::Infinity>();
}

} // namespace liext
