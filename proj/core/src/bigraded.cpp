#include "liext/bigraded.hpp"

#include <cmath>

namespace liext {

namespace {

int sign_pq(int p, int q) { return (p * q) % 2 == 0 ? 1 : -1; }

double max_abs_vec(const std::vector<Rat>& v) {
  double m = 0.0;
  for (const Rat& x : v) m = std::max(m, std::abs(x.convert_to<double>()));
  return m;
}

} // namespace

BigradedCochain BigradedCochain::zero(int n_base, int n_kernel, int p, int q) {
  BigradedCochain out;
  out.p = p;
  out.q = q;
  out.coeffs.assign(static_cast<std::size_t>(binomial(n_base, p)),
                    std::vector<Rat>(static_cast<std::size_t>(binomial(n_kernel, q)), Rat(0)));
  return out;
}

double BigradedCochain::max_abs() const {
  double m = 0.0;
  for (const auto& row : coeffs) m = std::max(m, max_abs_vec(row));
  return m;
}

bool BigradedCochain::is_exactly_zero() const {
  for (const auto& row : coeffs)
    for (const Rat& x : row)
      if (x != 0) return false;
  return true;
}

std::vector<Rat> BigradedCochain::flat() const {
  std::vector<Rat> v;
  v.reserve(coeffs.size() * (coeffs.empty() ? 0 : coeffs[0].size()));
  for (const auto& row : coeffs) v.insert(v.end(), row.begin(), row.end());
  return v;
}

BigradedCochain BigradedCochain::from_flat(int n_base, int n_kernel, int p, int q,
                                           const std::vector<Rat>& v) {
  BigradedCochain out = zero(n_base, n_kernel, p, q);
  std::size_t idx = 0;
  for (auto& row : out.coeffs)
    for (Rat& x : row) x = v.at(idx++);
  return out;
}

std::vector<BigradedCochain> decompose(const ExtendedAlgebra& ext, const Cochain& Theta) {
  const int nk = ext.n_kernel, nb = ext.n_base, n = nk + nb;
  if (Theta.n() != n) throw ContractViolation("cochain lives on a different algebra");
  const int k = Theta.degree();
  std::vector<BigradedCochain> out;
  for (int p = std::max(0, k - nk); p <= std::min(nb, k); ++p) {
    const int q = k - p;
    BigradedCochain comp = BigradedCochain::zero(nb, nk, p, q);
    auto Ps = subsets(nb, p);
    auto Qs = subsets(nk, q);
    for (std::size_t pr = 0; pr < Ps.size(); ++pr)
      for (std::size_t qr = 0; qr < Qs.size(); ++qr) {
        IndexSubset total = Qs[qr];
        for (int idx : Ps[pr]) total.push_back(nk + idx);
        comp.coeffs[pr][qr] =
            Rat(sign_pq(p, q)) * Theta.at(subset_rank(n, total)).value();
      }
    out.push_back(std::move(comp));
  }
  return out;
}

Cochain recompose(const ExtendedAlgebra& ext, const std::vector<BigradedCochain>& components) {
  if (components.empty()) throw ContractViolation("nothing to recompose");
  const int nk = ext.n_kernel, nb = ext.n_base, n = nk + nb;
  const int k = components[0].p + components[0].q;
  for (const auto& c : components)
    if (c.p + c.q != k) throw ContractViolation("components of mixed total degree");
  Cochain Theta(n, k, 1);
  for (const auto& c : components) {
    auto Ps = subsets(nb, c.p);
    auto Qs = subsets(nk, c.q);
    for (std::size_t pr = 0; pr < Ps.size(); ++pr)
      for (std::size_t qr = 0; qr < Qs.size(); ++qr) {
        if (c.coeffs[pr][qr] == 0) continue;
        IndexSubset total = Qs[qr];
        for (int idx : Ps[pr]) total.push_back(nk + idx);
        Theta.at(subset_rank(n, total)) =
            Scalar(Rat(sign_pq(c.p, c.q)) * c.coeffs[pr][qr]);
      }
  }
  return Theta;
}

RatMat delta01_matrix(const Couple& cpl, int p, int q) {
  const int nb = cpl.n_base(), nk = cpl.n_kernel();
  const int rows = static_cast<int>(binomial(nb, p) * binomial(nk, q + 1));
  const int cols = static_cast<int>(binomial(nb, p) * binomial(nk, q));
  RatMat out(rows, cols);
  if (q + 1 > nk || p > nb) return out;
  RatMat dk = ce_differential(cpl.kernel(), std::nullopt, q);
  const int br = dk.rows(), bc = dk.cols();
  const int sgn = (p % 2 == 0) ? 1 : -1;
  const int nblocks = static_cast<int>(binomial(nb, p));
  for (int blk = 0; blk < nblocks; ++blk)
    for (int i = 0; i < br; ++i)
      for (int j = 0; j < bc; ++j)
        if (dk(i, j) != 0) out(blk * br + i, blk * bc + j) = sgn * dk(i, j);
  return out;
}

RatMat delta10_matrix(const Couple& cpl, int p, int q) {
  const int nb = cpl.n_base(), nk = cpl.n_kernel();
  const int qdim = static_cast<int>(binomial(nk, q));
  const int rows = static_cast<int>(binomial(nb, p + 1)) * qdim;
  const int cols = static_cast<int>(binomial(nb, p)) * qdim;
  RatMat out(rows, cols);
  if (p + 1 > nb) return out;

  std::vector<RatMat> coact;
  coact.reserve(nb);
  for (int i = 0; i < nb; ++i) coact.push_back(exterior_power_coaction(cpl.D(i), nk, q));

  auto Ts = subsets(nb, p + 1);
  for (std::size_t tr = 0; tr < Ts.size(); ++tr) {
    const IndexSubset& T = Ts[tr];
    for (int i = 0; i <= p; ++i) {
      const int sgn = (i % 2 == 0) ? 1 : -1;
      std::int64_t sr = subset_rank(nb, erase_at(T, i));
      const RatMat& D = coact[T[i]];
      for (int r = 0; r < qdim; ++r)
        for (int c = 0; c < qdim; ++c)
          if (D(r, c) != 0)
            out(static_cast<int>(tr) * qdim + r, static_cast<int>(sr) * qdim + c) += sgn * D(r, c);
    }
    for (int i = 0; i <= p; ++i)
      for (int j = i + 1; j <= p; ++j) {
        const int sij = ((i + j) % 2 == 0) ? 1 : -1;
        IndexSubset R = erase_at(erase_at(T, j), i);
        for (int l = 0; l < nb; ++l) {
          Rat cl = cpl.base().c_rat(T[i], T[j], l);
          if (cl == 0) continue;
          auto ins = insert_with_sign(R, l);
          if (!ins) continue;
          std::int64_t sr = subset_rank(nb, ins->second);
          Rat f = Rat(sij * ins->first) * cl;
          for (int r = 0; r < qdim; ++r)
            out(static_cast<int>(tr) * qdim + r, static_cast<int>(sr) * qdim + r) += f;
        }
      }
  }
  return out;
}

RatMat delta21_matrix(const Couple& cpl, int p, int q) {
  const int nb = cpl.n_base(), nk = cpl.n_kernel();
  const int rows = static_cast<int>(binomial(nb, p + 2) * binomial(nk, q - 1));
  const int cols = static_cast<int>(binomial(nb, p) * binomial(nk, q));
  RatMat out(std::max(rows, 0), cols);
  if (q < 1 || p + 2 > nb) return out;
  const int qdim = static_cast<int>(binomial(nk, q));
  const int qdim1 = static_cast<int>(binomial(nk, q - 1));
  // Note the overall (-1)^p: with the split-bracket convention
  // [h(a), h(b)] = h([a,b]) + omega(a,b) this is the prefactor that makes the
  // three components sum to the total differential exactly.
  const int psgn = (p % 2 == 0) ? 1 : -1;

  auto Ts = subsets(nb, p + 2);
  auto Q1s = subsets(nk, q - 1);
  for (std::size_t tr = 0; tr < Ts.size(); ++tr) {
    const IndexSubset& T = Ts[tr];
    for (int i = 0; i <= p + 1; ++i)
      for (int j = i + 1; j <= p + 1; ++j) {
        const int sij = ((i + j) % 2 == 0) ? 1 : -1;
        std::int64_t sr = subset_rank(nb, erase_at(erase_at(T, j), i));
        auto w = cpl.omega(T[i], T[j]);
        for (std::size_t q1 = 0; q1 < Q1s.size(); ++q1) {
          for (int m = 0; m < nk; ++m) {
            if (w[m] == 0) continue;
            auto ins = insert_with_sign(Q1s[q1], m);
            if (!ins) continue;
            std::int64_t qr = subset_rank(nk, ins->second);
            out(static_cast<int>(tr) * qdim1 + static_cast<int>(q1),
                static_cast<int>(sr) * qdim + static_cast<int>(qr)) +=
                Rat(psgn * sij * ins->first) * w[m];
          }
        }
      }
  }
  return out;
}

namespace {

BigradedCochain apply_delta(const Couple& cpl, const BigradedCochain& theta, const RatMat& m,
                            int dp, int dq) {
  auto flatv = theta.flat();
  std::vector<Rat> image = m * flatv;
  return BigradedCochain::from_flat(cpl.n_base(), cpl.n_kernel(), theta.p + dp, theta.q + dq, image);
}

} // namespace

BigradedCochain delta01(const Couple& cpl, const BigradedCochain& theta) {
  if (theta.q + 1 > cpl.n_kernel())
    return BigradedCochain::zero(cpl.n_base(), cpl.n_kernel(), theta.p, theta.q + 1);
  return apply_delta(cpl, theta, delta01_matrix(cpl, theta.p, theta.q), 0, 1);
}

BigradedCochain delta10(const Couple& cpl, const BigradedCochain& theta) {
  if (theta.p + 1 > cpl.n_base())
    return BigradedCochain::zero(cpl.n_base(), cpl.n_kernel(), theta.p + 1, theta.q);
  return apply_delta(cpl, theta, delta10_matrix(cpl, theta.p, theta.q), 1, 0);
}

BigradedCochain delta21(const Couple& cpl, const BigradedCochain& theta) {
  if (theta.q < 1) throw ContractViolation("omega insertion needs kernel degree at least 1");
  if (theta.p + 2 > cpl.n_base())
    return BigradedCochain::zero(cpl.n_base(), cpl.n_kernel(), theta.p + 2, theta.q - 1);
  return apply_delta(cpl, theta, delta21_matrix(cpl, theta.p, theta.q), 2, -1);
}

double verify_sum_decomposition(const ExtendedAlgebra& ext, const Couple& cpl, int k) {
  const int n = ext.n_kernel + ext.n_base;
  if (k < 0 || k > n) throw ContractViolation("degree out of range");
  RatMat d = ce_differential(ext.total, std::nullopt, k);
  const auto basis_count = binomial(n, k);
  double worst = 0.0;
  for (std::int64_t col = 0; col < basis_count; ++col) {
    Cochain Theta(n, k, 1);
    Theta.at(col) = Scalar(1);
    Cochain dTheta(n, k + 1, 1);
    for (std::int64_t row = 0; row < binomial(n, k + 1); ++row)
      dTheta.at(row) = Scalar(d(static_cast<int>(row), static_cast<int>(col)));
    auto lhs = decompose(ext, dTheta);

    std::vector<BigradedCochain> rhs;
    for (int p = std::max(0, k + 1 - ext.n_kernel); p <= std::min(ext.n_base, k + 1); ++p)
      rhs.push_back(BigradedCochain::zero(ext.n_base, ext.n_kernel, p, k + 1 - p));
    auto add_into = [&](const BigradedCochain& c) {
      for (auto& target : rhs)
        if (target.p == c.p && target.q == c.q) {
          for (std::size_t i = 0; i < c.coeffs.size(); ++i)
            for (std::size_t j = 0; j < c.coeffs[i].size(); ++j)
              target.coeffs[i][j] += c.coeffs[i][j];
          return;
        }
      if (!c.is_exactly_zero()) throw ContractViolation("component fell outside the target degree");
    };
    for (const auto& comp : decompose(ext, Theta)) {
      add_into(delta01(cpl, comp));
      add_into(delta10(cpl, comp));
      if (comp.q >= 1) add_into(delta21(cpl, comp));
    }

    for (const auto& l : lhs)
      for (auto& r : rhs)
        if (l.p == r.p && l.q == r.q)
          for (std::size_t i = 0; i < l.coeffs.size(); ++i)
            for (std::size_t j = 0; j < l.coeffs[i].size(); ++j) {
              Rat defect = l.coeffs[i][j] - r.coeffs[i][j];
              worst = std::max(worst, std::abs(defect.convert_to<double>()));
            }
  }
  return worst;
}

std::array<double, 5> verify_relations(const Couple& cpl) {
  const int nb = cpl.n_base(), nk = cpl.n_kernel();
  std::array<double, 5> out{0, 0, 0, 0, 0};
  auto worst_entry = [](const RatMat& m) {
    double w = 0.0;
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) w = std::max(w, std::abs(m(i, j).convert_to<double>()));
    return w;
  };
  auto add = [](const RatMat& a, const RatMat& b) {
    RatMat c = a;
    for (int i = 0; i < c.rows(); ++i)
      for (int j = 0; j < c.cols(); ++j) c(i, j) += b(i, j);
    return c;
  };
  for (int p = 0; p <= nb; ++p)
    for (int q = 0; q <= nk; ++q) {
      RatMat dK = delta01_matrix(cpl, p, q);
      RatMat dH = delta10_matrix(cpl, p, q);
      RatMat dW = delta21_matrix(cpl, p, q);
      out[0] = std::max(out[0], worst_entry(delta01_matrix(cpl, p, q + 1) * dK));
      out[1] = std::max(out[1], worst_entry(add(delta01_matrix(cpl, p + 1, q) * dH,
                                                delta10_matrix(cpl, p, q + 1) * dK)));
      RatMat iii = add(delta10_matrix(cpl, p + 1, q) * dH, delta21_matrix(cpl, p, q + 1) * dK);
      if (q >= 1) iii = add(iii, delta01_matrix(cpl, p + 2, q - 1) * dW);
      out[2] = std::max(out[2], worst_entry(iii));
      if (q >= 1)
        out[3] = std::max(out[3], worst_entry(add(delta10_matrix(cpl, p + 2, q - 1) * dW,
                                                  delta21_matrix(cpl, p + 1, q) * dH)));
      if (q >= 2)
        out[4] = std::max(out[4], worst_entry(delta21_matrix(cpl, p + 2, q - 1) * dW));
    }
  return out;
}

} // namespace liext
