#include "liext/couple.hpp"

#include <cmath>

namespace liext {

namespace {

int pair_rank(int n, int i, int j) { return static_cast<int>(subset_rank(n, {i, j})); }

double max_abs_rat(const std::vector<Rat>& v) {
  double m = 0.0;
  for (const Rat& x : v) m = std::max(m, std::abs(x.convert_to<double>()));
  return m;
}

double max_abs_mat(const RatMat& m) {
  double r = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r = std::max(r, std::abs(m(i, j).convert_to<double>()));
  return r;
}

bool mat_zero(const RatMat& m) { return m.is_zero(); }

} // namespace

KValuedForm KValuedForm::zero(int n_base, int n_kernel, int p, int l) {
  KValuedForm f;
  f.p = p;
  f.l = l;
  f.coeffs.assign(static_cast<std::size_t>(binomial(n_base, p)),
                  std::vector<Rat>(static_cast<std::size_t>(binomial(n_kernel, l)), Rat(0)));
  return f;
}

double KValuedForm::max_abs() const {
  double m = 0.0;
  for (const auto& c : coeffs) m = std::max(m, max_abs_rat(c));
  return m;
}

bool KValuedForm::is_exactly_zero() const {
  for (const auto& c : coeffs)
    for (const Rat& x : c)
      if (x != 0) return false;
  return true;
}

Couple::Couple(LieAlgebra base, LieAlgebra kernel, std::vector<RatMat> D,
               std::vector<std::vector<Rat>> omega_upper)
    : base_(std::move(base)), kernel_(std::move(kernel)), D_(std::move(D)), omega_(std::move(omega_upper)) {
  const int nb = base_.dim(), nk = kernel_.dim();
  if (static_cast<int>(D_.size()) != nb) throw ContractViolation("couple needs one D matrix per base basis vector");
  for (const RatMat& d : D_) {
    if (d.rows() != nk || d.cols() != nk) throw ContractViolation("D matrix shape mismatch");
    if (!is_derivation(kernel_, d)) throw ContractViolation("D entry is not a derivation of the kernel");
  }
  const std::size_t npairs = static_cast<std::size_t>(binomial(nb, 2));
  if (omega_.size() != npairs) throw ContractViolation("omega entry count mismatch");
  for (const auto& w : omega_)
    if (static_cast<int>(w.size()) != nk) throw ContractViolation("omega value length mismatch");

  Dd_.reserve(D_.size());
  for (const RatMat& d : D_) {
    Mat m(nk, nk);
    for (int i = 0; i < nk; ++i)
      for (int j = 0; j < nk; ++j) m(i, j) = d(i, j).convert_to<double>();
    Dd_.push_back(std::move(m));
  }
  omegad_.reserve(omega_.size());
  for (const auto& w : omega_) {
    Vec v(nk);
    for (int i = 0; i < nk; ++i) v[i] = w[i].convert_to<double>();
    omegad_.push_back(std::move(v));
  }
}

std::vector<Rat> Couple::omega(int i, int j) const {
  const int nk = kernel_.dim();
  std::vector<Rat> out(nk, Rat(0));
  if (i == j) return out;
  const auto& w = omega_[pair_rank(base_.dim(), std::min(i, j), std::max(i, j))];
  for (int k = 0; k < nk; ++k) out[k] = (i < j) ? w[k] : -w[k];
  return out;
}

KValuedForm Couple::omega_form() const {
  KValuedForm f = KValuedForm::zero(n_base(), n_kernel(), 2, 1);
  for (std::size_t r = 0; r < omega_.size(); ++r) f.coeffs[r] = omega_[r];
  return f;
}

Mat Couple::D_along(const Vec& a) const {
  Mat m = Mat::Zero(n_kernel(), n_kernel());
  for (int i = 0; i < n_base(); ++i)
    if (a[i] != 0.0) m += a[i] * Dd_[i];
  return m;
}

Vec Couple::omega_eval(const Vec& a, const Vec& b) const {
  Vec out = Vec::Zero(n_kernel());
  int r = 0;
  for (int i = 0; i < n_base(); ++i)
    for (int j = i + 1; j < n_base(); ++j, ++r) {
      double f = a[i] * b[j] - a[j] * b[i];
      if (f != 0.0) out += f * omegad_[r];
    }
  return out;
}

Mode Couple::mode() const {
  return (base_.mode() == Mode::approx || kernel_.mode() == Mode::approx) ? Mode::approx : Mode::exact;
}

std::vector<RatMat> curv_D(const Couple& cpl) {
  const int nb = cpl.n_base(), nk = cpl.n_kernel();
  std::vector<RatMat> out;
  out.reserve(static_cast<std::size_t>(binomial(nb, 2)));
  for (int i = 0; i < nb; ++i)
    for (int j = i + 1; j < nb; ++j) {
      RatMat m(nk, nk);
      RatMat ab = cpl.D(i) * cpl.D(j);
      RatMat ba = cpl.D(j) * cpl.D(i);
      for (int r = 0; r < nk; ++r)
        for (int c = 0; c < nk; ++c) m(r, c) = ab(r, c) - ba(r, c);
      for (int l = 0; l < nb; ++l) {
        Rat cl = cpl.base().c_rat(i, j, l);
        if (cl == 0) continue;
        for (int r = 0; r < nk; ++r)
          for (int c = 0; c < nk; ++c) m(r, c) -= cl * cpl.D(l)(r, c);
      }
      out.push_back(std::move(m));
    }
  return out;
}

KValuedForm covariant_differential(const Couple& cpl, const KValuedForm& theta) {
  const int nb = cpl.n_base(), nk = cpl.n_kernel();
  if (theta.p < 0 || theta.p > nb || theta.l < 0 || theta.l > nk)
    throw ContractViolation("form degree out of range");
  KValuedForm out = KValuedForm::zero(nb, nk, theta.p + 1, theta.l);
  if (theta.p + 1 > nb) return out;

  std::vector<RatMat> Dl;
  Dl.reserve(nb);
  for (int i = 0; i < nb; ++i) Dl.push_back(exterior_power_action(cpl.D(i), nk, theta.l));

  const auto rows = subsets(nb, theta.p + 1);
  for (std::size_t tr = 0; tr < rows.size(); ++tr) {
    const IndexSubset& T = rows[tr];
    auto& target = out.coeffs[tr];
    for (int i = 0; i <= theta.p; ++i) {
      const int sgn = (i % 2 == 0) ? 1 : -1;
      IndexSubset S = erase_at(T, i);
      const auto& src = theta.coeffs[subset_rank(nb, S)];
      const RatMat& Dm = Dl[T[i]];
      for (int r = 0; r < Dm.rows(); ++r) {
        Rat acc(0);
        for (int c = 0; c < Dm.cols(); ++c)
          if (Dm(r, c) != 0 && src[c] != 0) acc += Dm(r, c) * src[c];
        if (acc != 0) target[r] += sgn * acc;
      }
    }
    for (int i = 0; i <= theta.p; ++i)
      for (int j = i + 1; j <= theta.p; ++j) {
        const int sij = ((i + j) % 2 == 0) ? 1 : -1;
        IndexSubset R = erase_at(erase_at(T, j), i);
        for (int l = 0; l < nb; ++l) {
          Rat cl = cpl.base().c_rat(T[i], T[j], l);
          if (cl == 0) continue;
          auto ins = insert_with_sign(R, l);
          if (!ins) continue;
          const auto& src = theta.coeffs[subset_rank(nb, ins->second)];
          Rat f = Rat(sij * ins->first) * cl;
          for (std::size_t r = 0; r < src.size(); ++r)
            if (src[r] != 0) target[r] += f * src[r];
        }
      }
  }
  return out;
}

AdmissibilityReport is_admissible(const Couple& cpl, double tol) {
  AdmissibilityReport rep;
  const bool exact = cpl.mode() == Mode::exact;

  KValuedForm closure = covariant_differential(cpl, cpl.omega_form());
  rep.closure_residual = closure.max_abs();
  rep.closure_ok = exact ? closure.is_exactly_zero() : rep.closure_residual <= tol;

  auto curv = curv_D(cpl);
  const int nk = cpl.n_kernel();
  double worst = 0.0;
  bool exact_ok = true;
  int r = 0;
  for (int i = 0; i < cpl.n_base(); ++i)
    for (int j = i + 1; j < cpl.n_base(); ++j, ++r) {
      RatMat want = ad(cpl.kernel(), cpl.omega(i, j));
      RatMat defect(nk, nk);
      for (int a = 0; a < nk; ++a)
        for (int b = 0; b < nk; ++b) defect(a, b) = curv[r](a, b) - want(a, b);
      if (!mat_zero(defect)) exact_ok = false;
      worst = std::max(worst, max_abs_mat(defect));
    }
  rep.curvature_residual = worst;
  rep.curvature_ok = exact ? exact_ok : worst <= tol;
  return rep;
}

ExtendedAlgebra build_extension(const Couple& cpl) {
  const int nk = cpl.n_kernel(), nb = cpl.n_base(), n = nk + nb;
  std::vector<BracketEntry> entries;
  // kernel block
  for (int i = 0; i < nk; ++i)
    for (int j = i + 1; j < nk; ++j)
      for (int k = 0; k < nk; ++k) {
        const Scalar& v = cpl.kernel().c(i, j, k);
        if (!(v == Scalar(0))) entries.push_back({i, j, k, v});
      }
  // [h(e_i), kappa] = D_i kappa
  for (int i = 0; i < nb; ++i)
    for (int a = 0; a < nk; ++a)
      for (int k = 0; k < nk; ++k) {
        Rat v = cpl.D(i)(k, a);
        if (v != 0) entries.push_back({nk + i, a, k, Scalar(v)});
      }
  // [h(e_i), h(e_j)] = h([e_i, e_j]_B) + omega(e_i, e_j)
  for (int i = 0; i < nb; ++i)
    for (int j = i + 1; j < nb; ++j) {
      for (int l = 0; l < nb; ++l) {
        const Scalar& v = cpl.base().c(i, j, l);
        if (!(v == Scalar(0))) entries.push_back({nk + i, nk + j, nk + l, v});
      }
      auto w = cpl.omega(i, j);
      for (int k = 0; k < nk; ++k)
        if (w[k] != 0) entries.push_back({nk + i, nk + j, k, Scalar(w[k])});
    }
  std::vector<std::string> names;
  for (const auto& s : cpl.kernel().basis_names()) names.push_back(s);
  for (const auto& s : cpl.base().basis_names()) names.push_back("h(" + s + ")");
  return ExtendedAlgebra{LieAlgebra::from_brackets(n, std::move(names), entries), nk, nb};
}

std::vector<Rat> project(const ExtendedAlgebra& ext, const std::vector<Rat>& v) {
  if (static_cast<int>(v.size()) != ext.n_kernel + ext.n_base)
    throw ContractViolation("projection operand length mismatch");
  return std::vector<Rat>(v.begin() + ext.n_kernel, v.end());
}

std::vector<Rat> inject(const ExtendedAlgebra& ext, const std::vector<Rat>& kappa) {
  if (static_cast<int>(kappa.size()) != ext.n_kernel)
    throw ContractViolation("injection operand length mismatch");
  std::vector<Rat> out(ext.n_kernel + ext.n_base, Rat(0));
  std::copy(kappa.begin(), kappa.end(), out.begin());
  return out;
}

std::vector<Rat> lift(const ExtendedAlgebra& ext, const std::vector<Rat>& alpha) {
  if (static_cast<int>(alpha.size()) != ext.n_base)
    throw ContractViolation("lift operand length mismatch");
  std::vector<Rat> out(ext.n_kernel + ext.n_base, Rat(0));
  std::copy(alpha.begin(), alpha.end(), out.begin() + ext.n_kernel);
  return out;
}

Vec project(const ExtendedAlgebra& ext, const Vec& v) { return v.tail(ext.n_base); }
Vec vertical_part(const ExtendedAlgebra& ext, const Vec& v) { return v.head(ext.n_kernel); }

Vec inject(const ExtendedAlgebra& ext, const Vec& kappa) {
  Vec out = Vec::Zero(ext.n_kernel + ext.n_base);
  out.head(ext.n_kernel) = kappa;
  return out;
}

Vec lift(const ExtendedAlgebra& ext, const Vec& alpha) {
  Vec out = Vec::Zero(ext.n_kernel + ext.n_base);
  out.tail(ext.n_base) = alpha;
  return out;
}

Couple apply_gauge(const Couple& cpl, const GaugeTransform& g) {
  const int nb = cpl.n_base(), nk = cpl.n_kernel();
  if (g.Delta.rows() != nk || g.Delta.cols() != nb) throw ContractViolation("gauge shape mismatch");

  std::vector<RatMat> Dp;
  Dp.reserve(nb);
  for (int i = 0; i < nb; ++i) {
    RatMat adD = ad(cpl.kernel(), g.Delta.column(i));
    RatMat m(nk, nk);
    for (int r = 0; r < nk; ++r)
      for (int c = 0; c < nk; ++c) m(r, c) = cpl.D(i)(r, c) + adD(r, c);
    Dp.push_back(std::move(m));
  }

  std::vector<std::vector<Rat>> omega_p;
  omega_p.reserve(static_cast<std::size_t>(binomial(nb, 2)));
  for (int i = 0; i < nb; ++i)
    for (int j = i + 1; j < nb; ++j) {
      std::vector<Rat> w = cpl.omega(i, j);
      std::vector<Rat> di = cpl.D(i) * g.Delta.column(j);
      std::vector<Rat> dj = cpl.D(j) * g.Delta.column(i);
      for (int k = 0; k < nk; ++k) w[k] += di[k] - dj[k];
      for (int l = 0; l < nb; ++l) {
        Rat cl = cpl.base().c_rat(i, j, l);
        if (cl == 0) continue;
        auto dl = g.Delta.column(l);
        for (int k = 0; k < nk; ++k) w[k] -= cl * dl[k];
      }
      auto br = cpl.kernel().bracket(g.Delta.column(i), g.Delta.column(j));
      for (int k = 0; k < nk; ++k) w[k] += br[k];
      omega_p.push_back(std::move(w));
    }

  return Couple(cpl.base(), cpl.kernel(), std::move(Dp), std::move(omega_p));
}

EquivalenceResult are_equivalent(const Couple& a, const Couple& b,
                                 const std::optional<GaugeTransform>& candidate) {
  if (!(a.base() == b.base()) || !(a.kernel() == b.kernel()))
    throw ContractViolation("couples live over different algebras");

  if (candidate) {
    Couple gauged = apply_gauge(a, *candidate);
    double worst = 0.0;
    bool same = true;
    for (int i = 0; i < a.n_base(); ++i) {
      for (int r = 0; r < a.n_kernel(); ++r)
        for (int c = 0; c < a.n_kernel(); ++c) {
          Rat d = gauged.D(i)(r, c) - b.D(i)(r, c);
          if (d != 0) same = false;
          worst = std::max(worst, std::abs(d.convert_to<double>()));
        }
    }
    for (int i = 0; i < a.n_base(); ++i)
      for (int j = i + 1; j < a.n_base(); ++j) {
        auto wg = gauged.omega(i, j);
        auto wb = b.omega(i, j);
        for (int k = 0; k < a.n_kernel(); ++k) {
          Rat d = wg[k] - wb[k];
          if (d != 0) same = false;
          worst = std::max(worst, std::abs(d.convert_to<double>()));
        }
      }
    if (same) return {EquivalenceStatus::equivalent, candidate->Delta, 0.0};
    return {EquivalenceStatus::not_equivalent, std::nullopt, worst};
  }

  const bool abelian_kernel = a.kernel().is_abelian();
  bool same_D = true;
  for (int i = 0; i < a.n_base() && same_D; ++i)
    for (int r = 0; r < a.n_kernel() && same_D; ++r)
      for (int c = 0; c < a.n_kernel(); ++c)
        if (a.D(i)(r, c) != b.D(i)(r, c)) { same_D = false; break; }
  if (!abelian_kernel || !same_D) return {EquivalenceStatus::undecided, std::nullopt, 0.0};

  // With K abelian and D shared, the gauge action on omega is linear:
  // omega2 - omega1 = dH Delta, i.e. the D-twisted degree-1 differential.
  Representation rep{a.n_kernel(), a.D()};
  RatMat d1 = ce_differential(a.base(), rep, 1);
  const int nk = a.n_kernel();
  std::vector<Rat> rhs;
  rhs.reserve(static_cast<std::size_t>(d1.rows()));
  for (int i = 0; i < a.n_base(); ++i)
    for (int j = i + 1; j < a.n_base(); ++j) {
      auto wa = a.omega(i, j);
      auto wb = b.omega(i, j);
      for (int k = 0; k < nk; ++k) rhs.push_back(wb[k] - wa[k]);
    }
  auto sol = solve(d1, rhs);
  if (!sol) return {EquivalenceStatus::not_equivalent, std::nullopt, 0.0};
  RatMat delta(nk, a.n_base());
  for (int i = 0; i < a.n_base(); ++i)
    for (int k = 0; k < nk; ++k) delta(k, i) = (*sol)[static_cast<std::size_t>(i) * nk + k];
  return {EquivalenceStatus::equivalent, delta, 0.0};
}

Couple semidirect(const LieAlgebra& base, const LieAlgebra& kernel, const std::vector<RatMat>& D) {
  Couple cpl(base, kernel, D,
             std::vector<std::vector<Rat>>(static_cast<std::size_t>(binomial(base.dim(), 2)),
                                           std::vector<Rat>(kernel.dim(), Rat(0))));
  auto curv = curv_D(cpl);
  double worst = 0.0;
  for (const RatMat& m : curv) worst = std::max(worst, max_abs_mat(m));
  if (worst > 0.0)
    throw ContractViolation("semidirect data has curvature, residual " + format_double(worst));
  return cpl;
}

Couple central(const LieAlgebra& base, int n, const std::vector<std::vector<Rat>>& omega_upper) {
  LieAlgebra kernel = abelian(n);
  std::vector<RatMat> D(base.dim(), RatMat(n, n));
  Couple cpl(base, kernel, std::move(D), omega_upper);
  KValuedForm dw = covariant_differential(cpl, cpl.omega_form());
  if (!dw.is_exactly_zero())
    throw ContractViolation("central curvature form is not closed, residual " +
                            format_double(dw.max_abs()));
  return cpl;
}

} // namespace liext
