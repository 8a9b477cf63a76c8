#include "liext/lie_algebra.hpp"

#include <cmath>
#include <utility>

namespace liext {

LieAlgebra::LieAlgebra(int dim, std::vector<std::string> basis_names, std::vector<Scalar> c)
    : dim_(dim), names_(std::move(basis_names)), c_(std::move(c)) {
  if (dim_ <= 0) throw ContractViolation("algebra dimension must be positive");
  if (static_cast<int>(names_.size()) != dim_)
    throw ContractViolation("basis name count does not match dim");
  if (c_.size() != static_cast<std::size_t>(dim_) * dim_ * dim_)
    throw ContractViolation("structure constant array has wrong shape");
  mode_ = Mode::exact;
  for (const Scalar& s : c_)
    if (!s.is_exact()) { mode_ = Mode::approx; break; }
  cd_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) cd_[i] = c_[i].to_double();
}

LieAlgebra LieAlgebra::from_brackets(int dim, std::vector<std::string> basis_names,
                                     const std::vector<BracketEntry>& entries) {
  std::vector<Scalar> c(static_cast<std::size_t>(dim) * dim * dim, Scalar(0));
  std::vector<bool> set(c.size(), false);
  auto idx = [dim](int i, int j, int k) {
    return (static_cast<std::size_t>(i) * dim + j) * dim + k;
  };
  for (const auto& e : entries) {
    if (e.i < 0 || e.i >= dim || e.j < 0 || e.j >= dim || e.k < 0 || e.k >= dim)
      throw ContractViolation("bracket entry index out of range");
    if (e.i == e.j && !(e.v == Scalar(0)))
      throw ContractViolation("nonzero bracket [e_i, e_i]");
    auto a = idx(e.i, e.j, e.k), b = idx(e.j, e.i, e.k);
    if ((set[a] && !(c[a] == e.v)) || (set[b] && !(c[b] == -e.v)))
      throw ContractViolation("conflicting duplicate bracket entry");
    c[a] = e.v;
    c[b] = -e.v;
    set[a] = set[b] = true;
  }
  if (basis_names.empty())
    for (int i = 0; i < dim; ++i) basis_names.push_back("e" + std::to_string(i + 1));
  return LieAlgebra(dim, std::move(basis_names), std::move(c));
}

std::vector<Rat> LieAlgebra::bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw ContractViolation("bracket operand length mismatch");
  std::vector<Rat> out(dim_, Rat(0));
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      Rat f = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) {
        const Rat& cijk = c_[idx(i, j, k)].value();
        if (cijk != 0) out[k] += f * cijk;
      }
    }
  }
  return out;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw ContractViolation("bracket operand length mismatch");
  Vec out = Vec::Zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < dim_; ++j) {
      double f = x[i] * y[j];
      if (f == 0.0) continue;
      for (int k = 0; k < dim_; ++k) out[k] += f * cd_[idx(i, j, k)];
    }
  }
  return out;
}

bool LieAlgebra::is_abelian() const {
  for (const Scalar& s : c_)
    if (!(s == Scalar(0))) return false;
  return true;
}

bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.dim_ != b.dim_) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (!(a.c_[i] == b.c_[i])) return false;
  return true;
}

JacobiReport check_jacobi(const LieAlgebra& L, double tol) {
  JacobiReport rep;
  const int n = L.dim();
  const bool exact = L.mode() == Mode::exact;
  auto note = [&](int i, int j, int k, const Rat& defect) {
    double r = std::abs(defect.convert_to<double>());
    bool bad = exact ? defect != 0 : r > tol;
    if (r > rep.max_residual) rep.max_residual = r;
    if (bad) {
      rep.ok = false;
      if (rep.violations.empty() || rep.violations.back().i != i ||
          rep.violations.back().j != j || rep.violations.back().k != k)
        rep.violations.push_back({i, j, k, r});
      else if (r > rep.violations.back().residual)
        rep.violations.back().residual = r;
    }
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        note(i, j, k, L.c_rat(i, j, k) + L.c_rat(j, i, k));
  std::vector<Rat> ei(n, Rat(0)), ej(n, Rat(0)), ek(n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        std::fill(ei.begin(), ei.end(), Rat(0));
        std::fill(ej.begin(), ej.end(), Rat(0));
        std::fill(ek.begin(), ek.end(), Rat(0));
        ei[i] = 1; ej[j] = 1; ek[k] = 1;
        auto s1 = L.bracket(L.bracket(ei, ej), ek);
        auto s2 = L.bracket(L.bracket(ej, ek), ei);
        auto s3 = L.bracket(L.bracket(ek, ei), ej);
        for (int m = 0; m < n; ++m) note(i, j, k, s1[m] + s2[m] + s3[m]);
      }
  return rep;
}

bool is_derivation(const LieAlgebra& L, const RatMat& M) {
  const int n = L.dim();
  if (M.rows() != n || M.cols() != n) throw ContractViolation("derivation matrix shape mismatch");
  std::vector<Rat> ei(n, Rat(0)), ej(n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::fill(ei.begin(), ei.end(), Rat(0));
      std::fill(ej.begin(), ej.end(), Rat(0));
      ei[i] = 1; ej[j] = 1;
      auto lhs = M * L.bracket(ei, ej);
      auto rhs1 = L.bracket(M * ei, ej);
      auto rhs2 = L.bracket(ei, M * ej);
      for (int k = 0; k < n; ++k)
        if (lhs[k] != rhs1[k] + rhs2[k]) return false;
    }
  return true;
}

double derivation_residual(const LieAlgebra& L, const Mat& M) {
  const int n = L.dim();
  if (M.rows() != n || M.cols() != n) throw ContractViolation("derivation matrix shape mismatch");
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec ei = Vec::Unit(n, i), ej = Vec::Unit(n, j);
      Vec defect = M * L.bracket(ei, ej) - L.bracket(M * ei, ej) - L.bracket(ei, M * ej);
      worst = std::max(worst, defect.lpNorm<Eigen::Infinity>());
    }
  return worst;
}

RatMat ad(const LieAlgebra& L, const std::vector<Rat>& x) {
  const int n = L.dim();
  if (static_cast<int>(x.size()) != n) throw ContractViolation("ad operand length mismatch");
  RatMat M(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Rat s(0);
      for (int i = 0; i < n; ++i)
        if (x[i] != 0) s += x[i] * L.c_rat(i, j, k);
      M(k, j) = s;
    }
  return M;
}

Mat ad_d(const LieAlgebra& L, const Vec& x) {
  const int n = L.dim();
  Mat M = Mat::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += x[i] * L.c_d(i, j, k);
      M(k, j) = s;
    }
  return M;
}

RatMat center(const LieAlgebra& L) {
  const int n = L.dim();
  RatMat stacked(n * n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        stacked(j * n + k, i) = L.c_rat(i, j, k);
  return kernel_basis(stacked);
}

LieAlgebra abelian(int n) {
  return LieAlgebra::from_brackets(n, {}, {});
}

LieAlgebra so3() {
  return LieAlgebra::from_brackets(3, {"e1", "e2", "e3"},
                                   {{0, 1, 2, Scalar(1)}, {1, 2, 0, Scalar(1)}, {2, 0, 1, Scalar(1)}});
}

LieAlgebra heisenberg3() {
  // basis (z, x, y) with [x, y] = z; the center comes first so the kernel
  // block convention of extensions is the identity embedding
  return LieAlgebra::from_brackets(3, {"z", "x", "y"}, {{1, 2, 0, Scalar(1)}});
}

LieAlgebra sl2() {
  return LieAlgebra::from_brackets(
      3, {"h", "e", "f"},
      {{0, 1, 1, Scalar(2)}, {0, 2, 2, Scalar(-2)}, {1, 2, 0, Scalar(1)}});
}

LieAlgebra aff1() {
  return LieAlgebra::from_brackets(2, {"x", "y"}, {{0, 1, 1, Scalar(1)}});
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const int n = a.dim() + b.dim();
  std::vector<std::string> names;
  for (const auto& s : a.basis_names()) names.push_back(s + "'");
  for (const auto& s : b.basis_names()) names.push_back(s + "''");
  std::vector<BracketEntry> entries;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k)
        if (!(a.c(i, j, k) == Scalar(0))) entries.push_back({i, j, k, a.c(i, j, k)});
  for (int i = 0; i < b.dim(); ++i)
    for (int j = i + 1; j < b.dim(); ++j)
      for (int k = 0; k < b.dim(); ++k)
        if (!(b.c(i, j, k) == Scalar(0)))
          entries.push_back({a.dim() + i, a.dim() + j, a.dim() + k, b.c(i, j, k)});
  return LieAlgebra::from_brackets(n, std::move(names), entries);
}

} // namespace liext
