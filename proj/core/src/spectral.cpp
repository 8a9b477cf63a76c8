#include "liext/spectral.hpp"

namespace liext {

int Page::dim(int p, int q) const {
  const PageEntry* e = entry(p, q);
  return e ? e->dim : 0;
}

const PageEntry* Page::entry(int p, int q) const {
  for (const auto& e : entries)
    if (e.p == p && e.q == q) return &e;
  return nullptr;
}

FilteredComplex::FilteredComplex(const Couple& cpl) : nb_(cpl.n_base()), nk_(cpl.n_kernel()) {
  if (cpl.mode() != Mode::exact)
    throw ContractViolation("spectral pages need exact-mode couples");
  if (!is_admissible(cpl).ok())
    throw ContractViolation("non-admissible couple: differential does not square to zero");
  const int n = nb_ + nk_;
  d_.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    RatMat dk(degree_dim(k + 1), degree_dim(k));
    for (int p = std::max(0, k - nk_); p <= std::min(nb_, k); ++p) {
      const int q = k - p;
      const int src = block_offset(k, p);
      auto place = [&](const RatMat& m, int tp) {
        if (m.rows() == 0) return;
        int dst = block_offset(k + 1, tp);
        if (dst < 0) return;
        for (int i = 0; i < m.rows(); ++i)
          for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) dk(dst + i, src + j) = m(i, j);
      };
      place(delta01_matrix(cpl, p, q), p);
      place(delta10_matrix(cpl, p, q), p + 1);
      if (q >= 1) place(delta21_matrix(cpl, p, q), p + 2);
    }
    d_.push_back(std::move(dk));
  }
}

int FilteredComplex::degree_dim(int k) const {
  int total = 0;
  for (int p = std::max(0, k - nk_); p <= std::min(nb_, k); ++p)
    total += static_cast<int>(binomial(nb_, p) * binomial(nk_, k - p));
  return total;
}

const RatMat& FilteredComplex::d(int k) const { return d_.at(k); }

int FilteredComplex::block_offset(int k, int p) const {
  if (p < std::max(0, k - nk_) || p > std::min(nb_, k)) return -1;
  int off = 0;
  for (int pp = std::max(0, k - nk_); pp < p; ++pp)
    off += static_cast<int>(binomial(nb_, pp) * binomial(nk_, k - pp));
  return off;
}

int FilteredComplex::block_size(int k, int p) const {
  if (block_offset(k, p) < 0) return 0;
  return static_cast<int>(binomial(nb_, p) * binomial(nk_, k - p));
}

RatMat FilteredComplex::Z(int r, int p, int q) const {
  const int k = p + q;
  const int n = total_dim();
  if (k < 0 || k > n) return RatMat(std::max(degree_dim(k), 0), 0);

  // columns spanning F^p in degree k
  std::vector<int> fcols;
  for (int pp = std::max({0, p, k - nk_}); pp <= std::min(nb_, k); ++pp) {
    int off = block_offset(k, pp);
    for (int j = 0; j < block_size(k, pp); ++j) fcols.push_back(off + j);
  }
  RatMat B(degree_dim(k), static_cast<int>(fcols.size()));
  for (std::size_t j = 0; j < fcols.size(); ++j) B(fcols[j], static_cast<int>(j)) = 1;
  if (fcols.empty()) return B;

  // constraint: the components of d x below filtration level p + r vanish
  std::vector<int> crows;
  for (int pp = std::max(0, k + 1 - nk_); pp <= std::min({nb_, k + 1, p + r - 1}); ++pp) {
    int off = block_offset(k + 1, pp);
    for (int i = 0; i < block_size(k + 1, pp); ++i) crows.push_back(off + i);
  }
  const RatMat& dk = d_.at(k);
  RatMat constraint(static_cast<int>(crows.size()), static_cast<int>(fcols.size()));
  for (std::size_t i = 0; i < crows.size(); ++i)
    for (std::size_t j = 0; j < fcols.size(); ++j) constraint(static_cast<int>(i), static_cast<int>(j)) = dk(crows[i], fcols[j]);
  RatMat ker = kernel_basis(constraint);
  return B * ker;
}

Page FilteredComplex::page(int r) const {
  Page out;
  out.r = r;
  const int n = total_dim();

  struct Slot {
    RatMat Zr, Nr, reps;
  };
  std::map<std::pair<int, int>, Slot> slots;

  for (int p = 0; p <= nb_; ++p)
    for (int q = 0; q <= nk_; ++q) {
      const int k = p + q;
      Slot s;
      s.Zr = Z(r, p, q);
      RatMat zprev = Z(r - 1, p + 1, q - 1);
      RatMat bsrc = Z(r - 1, p - r + 1, q + r - 2);
      RatMat boundary = (k >= 1 && bsrc.cols() > 0) ? d_.at(k - 1) * bsrc
                                                    : RatMat(degree_dim(k), 0);
      s.Nr = zprev.hcat(boundary);

      auto idx = independent_columns(s.Nr, s.Zr);
      RatMat reps(degree_dim(k), static_cast<int>(idx.size()));
      for (std::size_t j = 0; j < idx.size(); ++j) reps.set_column(static_cast<int>(j), s.Zr.column(idx[j]));
      s.reps = std::move(reps);

      PageEntry e;
      e.p = p;
      e.q = q;
      e.dim = s.reps.cols();
      e.representatives = s.reps;
      out.entries.push_back(std::move(e));
      slots[{p, q}] = std::move(s);
    }

  // induced differentials on representatives
  for (int p = 0; p <= nb_; ++p)
    for (int q = 0; q <= nk_; ++q) {
      const int tp = p + r, tq = q - r + 1;
      if (tp > nb_ || tq < 0 || tq > nk_) continue;
      const Slot& src = slots[{p, q}];
      const Slot& dst = slots[{tp, tq}];
      RatMat dr(dst.reps.cols(), src.reps.cols());
      if (src.reps.cols() > 0 && p + q <= n) {
        RatMat images = d_.at(p + q) * src.reps;
        RatMat system = dst.Nr.hcat(dst.reps);
        for (int j = 0; j < images.cols(); ++j) {
          auto sol = solve(system, images.column(j));
          if (!sol) throw ContractViolation("page differential left the computed page");
          for (int i = 0; i < dst.reps.cols(); ++i) dr(i, j) = (*sol)[dst.Nr.cols() + i];
        }
      }
      out.d[{p, q}] = std::move(dr);
    }
  return out;
}

Page page(const Couple& cpl, int r) { return FilteredComplex(cpl).page(r); }

AbutmentReport abutment(const Couple& cpl) {
  FilteredComplex fc(cpl);
  Page einf = fc.page(fc.stable_r());
  const int n = fc.total_dim();
  AbutmentReport rep;
  rep.spectral.assign(n + 1, 0);
  for (const auto& e : einf.entries)
    if (e.p + e.q <= n) rep.spectral[e.p + e.q] += e.dim;
  rep.betti = cohomology_dims(build_extension(cpl).total);
  rep.ok = rep.spectral == rep.betti;
  return rep;
}

} // namespace liext
