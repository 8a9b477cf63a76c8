#pragma once

#include "liext/couple.hpp"
#include "liext/evolution.hpp"
#include "liext/holonomy.hpp"

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <functional>

// Shared generators and independent oracles for the test suites. Everything
// here is deliberately written against the definitions rather than reusing
// the library's internal elimination or sign machinery.
namespace liext::testutil {

using BigInt = boost::multiprecision::mpz_int;

// splitmix64: deterministic across platforms, seedable per test
struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(next() >> 11) * 0x1.0p-53);
  }
  int uniform_int(int lo, int hi) { // inclusive
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Rat small_rat(int num_range = 3, int den_max = 3) {
    int num = uniform_int(-num_range, num_range);
    int den = uniform_int(1, den_max);
    return Rat(num) / den;
  }
};

/// Fraction-free Bareiss rank after clearing denominators row by row.
inline int bareiss_rank(const RatMat& m) {
  const int rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (int i = 0; i < rows; ++i) {
    BigInt lcm = 1;
    for (int j = 0; j < cols; ++j)
      lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(m(i, j))));
    for (int j = 0; j < cols; ++j) {
      Rat scaled = m(i, j) * Rat(lcm);
      a[i][j] = BigInt(boost::multiprecision::numerator(scaled));
    }
  }
  BigInt prev = 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (a[i][col] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j)
        a[i][j] = (a[i][j] * a[rank][col] - a[i][col] * a[rank][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

/// Alternating evaluation sign computed by explicit insertion sort: returns
/// (sign, sorted list) or nullopt when an index repeats.
inline std::optional<std::pair<int, std::vector<int>>> sort_sign(std::vector<int> idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return std::nullopt;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  return std::make_pair(sign, idx);
}

/// Definition-driven CE differential on trivial coefficients: evaluates
/// d c (e_T) = sum_{i<j} (-1)^{i+j} c([e_Ti, e_Tj], e_T minus {i,j}).
inline RatMat ce_matrix_reference(const LieAlgebra& L, int k) {
  const int n = L.dim();
  auto rows = subsets(n, k + 1);
  auto cols = subsets(n, k);
  RatMat d(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t tr = 0; tr < rows.size(); ++tr) {
    const auto& T = rows[tr];
    for (int i = 0; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        std::vector<int> rest;
        for (int m = 0; m <= k; ++m)
          if (m != i && m != j) rest.push_back(T[m]);
        for (int l = 0; l < n; ++l) {
          Rat cl = L.c_rat(T[i], T[j], l);
          if (cl == 0) continue;
          std::vector<int> args = {l};
          args.insert(args.end(), rest.begin(), rest.end());
          auto sorted = sort_sign(args);
          if (!sorted) continue;
          int sij = ((i + j) % 2 == 0) ? 1 : -1;
          d(static_cast<int>(tr), static_cast<int>(subset_rank(n, sorted->second))) +=
              Rat(sij * sorted->first) * cl;
        }
      }
  }
  return d;
}

/// Independent Betti numbers: reference differential + Bareiss ranks.
inline std::vector<int> betti_reference(const LieAlgebra& L) {
  const int n = L.dim();
  std::vector<int> ranks(n + 1, 0);
  for (int k = 0; k < n; ++k) ranks[k] = bareiss_rank(ce_matrix_reference(L, k));
  std::vector<int> b(n + 1);
  for (int k = 0; k <= n; ++k)
    b[k] = static_cast<int>(binomial(n, k)) - ranks[k] - (k ? ranks[k - 1] : 0);
  return b;
}

// --- couple generators -----------------------------------------------------

inline RatMat rat_matrix(int rows, int cols, const std::function<Rat(int, int)>& f) {
  RatMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = f(i, j);
  return m;
}

inline std::vector<Rat> random_kernel_vector(Rng& rng, int nk) {
  std::vector<Rat> v(nk);
  for (auto& x : v) x = rng.small_rat();
  return v;
}

inline GaugeTransform random_gauge(Rng& rng, const Couple& cpl) {
  return GaugeTransform{rat_matrix(cpl.n_kernel(), cpl.n_base(),
                                   [&](int, int) { return rng.small_rat(2, 2); })};
}

/// The spec's standing example: abelian plane acting on so(3) by inner
/// derivations, curvature absorbed by omega(e1, e2) = e3.
inline Couple so3_kernel_couple() {
  LieAlgebra K = so3();
  std::vector<Rat> e1{1, 0, 0}, e2{0, 1, 0};
  std::vector<std::vector<Rat>> omega{{Rat(0), Rat(0), Rat(1)}};
  return Couple(abelian(2), K, {ad(K, e1), ad(K, e2)}, omega);
}

inline Couple heisenberg_couple() {
  return central(abelian(2), 1, {{Rat(1)}});
}

/// Random admissible couple: a seed from the catalog, then gauge scrambles.
inline Couple random_admissible(Rng& rng) {
  int kind = rng.uniform_int(0, 5);
  Couple seed = [&]() -> Couple {
    switch (kind) {
      case 0: { // central over a catalog base, omega a random closed form
        LieAlgebra base = [&] {
          switch (rng.uniform_int(0, 3)) {
            case 0: return abelian(2);
            case 1: return abelian(3);
            case 2: return so3();
            default: return heisenberg3();
          }
        }();
        int n = rng.uniform_int(1, 2);
        RatMat d2 = ce_differential(base, std::nullopt, 2);
        RatMat closed = kernel_basis(d2);
        const int pairs = static_cast<int>(binomial(base.dim(), 2));
        std::vector<std::vector<Rat>> omega(pairs, std::vector<Rat>(n, Rat(0)));
        for (int c = 0; c < n; ++c) {
          for (int b = 0; b < closed.cols(); ++b) {
            Rat coeff = rng.small_rat(2, 2);
            for (int r = 0; r < pairs; ++r) omega[r][c] += coeff * closed(r, b);
          }
        }
        return central(base, n, omega);
      }
      case 1: { // adjoint semidirect: an algebra acting on itself
        LieAlgebra K = rng.uniform_int(0, 1) ? so3() : sl2();
        std::vector<RatMat> D;
        for (int i = 0; i < K.dim(); ++i) {
          std::vector<Rat> e(K.dim(), Rat(0));
          e[i] = 1;
          D.push_back(ad(K, e));
        }
        return semidirect(K, K, D);
      }
      case 2: { // so(3) on R^3, the classical six-dimensional semidirect sum
        LieAlgebra base = so3();
        Representation rep = adjoint_rep(base);
        return semidirect(base, abelian(3), rep.rho);
      }
      case 3: { // sl(2) on R^2 by the defining representation
        Representation rep;
        rep.dim = 2;
        rep.rho = {rat_matrix(2, 2, [](int i, int j) { return i == j ? Rat(1 - 2 * i) : Rat(0); }),
                   rat_matrix(2, 2, [](int i, int j) { return (i == 0 && j == 1) ? Rat(1) : Rat(0); }),
                   rat_matrix(2, 2, [](int i, int j) { return (i == 1 && j == 0) ? Rat(1) : Rat(0); })};
        return semidirect(sl2(), abelian(2), rep.rho);
      }
      case 4: { // abelian plane acting through powers of one derivation
        LieAlgebra K = abelian(rng.uniform_int(2, 4));
        RatMat M = rat_matrix(K.dim(), K.dim(), [&](int, int) { return rng.small_rat(2, 2); });
        RatMat M2(K.dim(), K.dim());
        Rat a = rng.small_rat(2, 2), b = rng.small_rat(2, 2);
        for (int i = 0; i < K.dim(); ++i)
          for (int j = 0; j < K.dim(); ++j) M2(i, j) = a * M(i, j) + (i == j ? b : Rat(0));
        return semidirect(abelian(2), K, {M, M2});
      }
      default:
        return so3_kernel_couple();
    }
  }();
  int scrambles = rng.uniform_int(0, 2);
  for (int s = 0; s < scrambles; ++s) seed = apply_gauge(seed, random_gauge(rng, seed));
  return seed;
}

/// Perturbation that respects the Couple type invariants (omega free, D
/// shifted by inner derivations) but usually breaks admissibility.
inline Couple perturb(Rng& rng, const Couple& cpl) {
  std::vector<RatMat> D = cpl.D();
  std::vector<std::vector<Rat>> omega = cpl.omega_upper();
  bool twist_d = !omega.empty() ? rng.uniform_int(0, 1) == 0 : true;
  if (twist_d) {
    int i = rng.uniform_int(0, cpl.n_base() - 1);
    RatMat shift = ad(cpl.kernel(), random_kernel_vector(rng, cpl.n_kernel()));
    bool all_zero = shift.is_zero();
    if (!all_zero) {
      for (int r = 0; r < shift.rows(); ++r)
        for (int c = 0; c < shift.cols(); ++c) D[i](r, c) += shift(r, c);
    } else if (!omega.empty()) {
      twist_d = false;
    }
  }
  if (!twist_d && !omega.empty()) {
    auto& w = omega[rng.uniform_int(0, static_cast<int>(omega.size()) - 1)];
    w[rng.uniform_int(0, cpl.n_kernel() - 1)] += Rat(rng.uniform_int(1, 3));
  }
  return Couple(cpl.base(), cpl.kernel(), std::move(D), std::move(omega));
}

// --- analytic grid builders -------------------------------------------------

inline Grid analytic_grid(int dim, int N, int M, const std::function<Vec(double, double)>& f) {
  Grid g(N + 1, std::vector<Vec>(M + 1));
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= M; ++j)
      g[i][j] = f(static_cast<double>(i) / N, static_cast<double>(j) / M);
  return g;
}

/// Grid pair from a reparametrization family of one path: sigma_eps(t) =
/// t + eps s(t) with s(0) = s(1) = 0. Exact morphism, genuine homotopy.
inline HomotopyGrid reparam_family(const LieAlgebra& L, const std::function<Vec(double)>& a0,
                                   const std::function<double(double)>& s,
                                   const std::function<double(double)>& sprime, int N, int M) {
  auto fa = [&](double t, double e) -> Vec {
    return (1.0 + e * sprime(t)) * a0(t + e * s(t));
  };
  auto fb = [&](double t, double e) -> Vec { return s(t) * a0(t + e * s(t)); };
  Grid a = analytic_grid(L.dim(), N, M, fa);
  Grid b = analytic_grid(L.dim(), N, M, fb);
  double tol = std::max(morphism_residual(L, a, b), default_tol_grid(N, M));
  return HomotopyGrid::make(L, std::move(a), std::move(b), tol);
}

/// Homotopy generated from an analytic b-family: march the evolution
/// equation in eps from a starting path. Every grid built this way satisfies
/// the homotopy condition when b vanishes on the t-boundary.
inline HomotopyGrid beta_driven_family(const LieAlgebra& L, const std::function<Vec(double)>& alpha0,
                                       const std::function<Vec(double, double)>& beta,
                                       const std::function<Vec(double, double)>& dbeta_dt, int N,
                                       int M) {
  const int n = L.dim();
  Grid a(N + 1, std::vector<Vec>(M + 1));
  const double he = 1.0 / M;
  for (int i = 0; i <= N; ++i) {
    double t = static_cast<double>(i) / N;
    auto rhs = [&](double e, const Vec& y) { return Vec(dbeta_dt(t, e) + L.bracket(y, beta(t, e))); };
    Vec y = alpha0(t);
    a[i][0] = y;
    for (int j = 0; j < M; ++j) {
      y = rk4_step(rhs, j * he, he, y);
      a[i][j + 1] = y;
    }
  }
  Grid b = analytic_grid(n, N, M, beta);
  double tol = std::max(morphism_residual(L, a, b), default_tol_grid(N, M));
  return HomotopyGrid::make(L, std::move(a), std::move(b), tol);
}

/// Exact A-sphere as the pullback of a path morphism under
/// (t, eps) -> phi(t) psi(eps): a = a0(T) phi' psi, b = a0(T) phi psi'.
/// phi and psi vanish at 0 and 1, so the boundary zeros are exact.
struct SphereShape {
  std::function<Vec(double)> a0;        // path in the algebra
  std::function<double(double)> phi, phip;
  std::function<double(double)> psi, psip;
};

inline ASphere pullback_sphere(const LieAlgebra& L, const SphereShape& s, int N, int M,
                               std::optional<double> tol = std::nullopt) {
  auto fa = [&](double t, double e) -> Vec {
    return s.phip(t) * s.psi(e) * s.a0(s.phi(t) * s.psi(e));
  };
  auto fb = [&](double t, double e) -> Vec {
    return s.phi(t) * s.psip(e) * s.a0(s.phi(t) * s.psi(e));
  };
  Grid a = analytic_grid(L.dim(), N, M, fa);
  Grid b = analytic_grid(L.dim(), N, M, fb);
  return ASphere::make(HomotopyGrid::make(L, std::move(a), std::move(b), tol));
}

// --- quadrature oracles ------------------------------------------------------

/// Composite Simpson on an odd count of uniform samples (falls back to
/// trapezoid on the last interval when the count is even).
inline double simpson_samples(const std::vector<double>& f, double h) {
  double acc = 0.0;
  std::size_t i = 0;
  for (; i + 2 < f.size(); i += 2) acc += (h / 3.0) * (f[i] + 4 * f[i + 1] + f[i + 2]);
  if (i + 1 < f.size()) acc += (h / 2.0) * (f[i] + f[i + 1]);
  return acc;
}

inline Vec path_integral(const APath& a) {
  const int n = a.algebra.dim();
  Vec out = Vec::Zero(n);
  for (int c = 0; c < n; ++c) {
    std::vector<double> f;
    f.reserve(a.samples.size());
    for (const Vec& v : a.samples) f.push_back(v[c]);
    out[c] = simpson_samples(f, 1.0 / a.N());
  }
  return out;
}

/// 2D Simpson of omega(a, b) over the unit square.
inline Vec omega_area(const Couple& cpl, const Grid& a, const Grid& b) {
  const int N = static_cast<int>(a.size()) - 1;
  const int M = static_cast<int>(a[0].size()) - 1;
  std::vector<double> per_eps;
  Vec out = Vec::Zero(cpl.n_kernel());
  for (int c = 0; c < cpl.n_kernel(); ++c) {
    std::vector<double> col(M + 1);
    for (int j = 0; j <= M; ++j) {
      std::vector<double> f(N + 1);
      for (int i = 0; i <= N; ++i) f[i] = cpl.omega_eval(a[i][j], b[i][j])[c];
      col[j] = simpson_samples(f, 1.0 / N);
    }
    out[c] = simpson_samples(col, 1.0 / M);
  }
  return out;
}

/// Nilpotent faithful representation of the abelian kernel R^n: rho(x) has x
/// in the last column of an (n+1)x(n+1) strictly upper block, so the flow's
/// top-right block accumulates plain integrals.
inline MatrixRep abelian_shift_rep(int n) {
  MatrixRep rep;
  rep.dim = n + 1;
  for (int k = 0; k < n; ++k) {
    Mat m = Mat::Zero(n + 1, n + 1);
    m(k, n) = 1.0;
    rep.rho.push_back(m);
  }
  return rep;
}

} // namespace liext::testutil
