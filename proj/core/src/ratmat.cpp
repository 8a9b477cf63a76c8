#include "liext/ratmat.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace liext {

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMat RatMat::from_columns(const std::vector<std::vector<Rat>>& cols) {
  if (cols.empty()) return RatMat();
  RatMat m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    assert(static_cast<int>(cols[j].size()) == m.rows());
    for (int i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
  }
  return m;
}

std::vector<Rat> RatMat::column(int j) const {
  std::vector<Rat> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void RatMat::set_column(int j, const std::vector<Rat>& v) {
  assert(static_cast<int>(v.size()) == rows_);
  for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

RatMat RatMat::transposed() const {
  RatMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMat RatMat::hcat(const RatMat& other) const {
  if (rows_ == 0 && cols_ == 0) return other;
  if (other.rows_ == 0 && other.cols_ == 0) return *this;
  assert(rows_ == other.rows_);
  RatMat m(rows_, cols_ + other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (int j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
  }
  return m;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
  assert(a.cols_ == b.rows_);
  RatMat c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::vector<Rat> operator*(const RatMat& a, const std::vector<Rat>& v) {
  assert(a.cols_ == static_cast<int>(v.size()));
  std::vector<Rat> out(a.rows_, Rat(0));
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j)
      if (a(i, j) != 0) out[i] += a(i, j) * v[j];
  return out;
}

bool RatMat::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

namespace {

/// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(RatMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    Rat inv = Rat(1) / m(row, col);
    for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rat f = m(i, col);
      for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace

int rank(RatMat m) { return static_cast<int>(rref(m).size()); }

RatMat kernel_basis(const RatMat& m) {
  RatMat r = m;
  std::vector<int> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  int nfree = m.cols() - static_cast<int>(pivots.size());
  RatMat basis(m.cols(), nfree);
  int k = 0;
  for (int col = 0; col < m.cols(); ++col) {
    if (is_pivot[col]) continue;
    basis(col, k) = 1;
    for (int pr = 0; pr < static_cast<int>(pivots.size()); ++pr)
      basis(pivots[pr], k) = -r(pr, col);
    ++k;
  }
  return basis;
}

std::optional<std::vector<Rat>> solve(const RatMat& m, const std::vector<Rat>& b) {
  assert(static_cast<int>(b.size()) == m.rows());
  RatMat aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<Rat> x(m.cols(), Rat(0));
  for (int pr = 0; pr < static_cast<int>(pivots.size()); ++pr) x[pivots[pr]] = aug(pr, m.cols());
  return x;
}

std::vector<int> independent_columns(const RatMat& base, const RatMat& candidates) {
  RatMat work = base.rows() > 0 ? base.hcat(candidates) : candidates;
  std::vector<int> pivots = rref(work);
  std::vector<int> out;
  for (int p : pivots)
    if (p >= base.cols()) out.push_back(p - base.cols());
  return out;
}

} // namespace liext
