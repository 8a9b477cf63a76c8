#pragma once

#include "liext/scalar.hpp"

#include <optional>
#include <vector>

namespace liext {

/// Dense matrix over the exact rationals. Small sizes only (the complexes in
/// this library have at most a few dozen rows), so plain Gauss-Jordan is fine.
class RatMat {
public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Rat(0)) {}

  static RatMat identity(int n);
  static RatMat from_columns(const std::vector<std::vector<Rat>>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rat& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  std::vector<Rat> column(int j) const;
  void set_column(int j, const std::vector<Rat>& v);
  RatMat transposed() const;

  /// Horizontal concatenation [this | other].
  RatMat hcat(const RatMat& other) const;

  friend RatMat operator*(const RatMat& a, const RatMat& b);
  friend std::vector<Rat> operator*(const RatMat& a, const std::vector<Rat>& v);

  bool is_zero() const;

private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

int rank(RatMat m);

/// Basis of the null space, one vector per column of the result.
RatMat kernel_basis(const RatMat& m);

/// Any solution of m x = b, or nullopt when inconsistent.
std::optional<std::vector<Rat>> solve(const RatMat& m, const std::vector<Rat>& b);

/// Columns of `candidates` that enlarge the span of `base`, i.e. representatives
/// of a basis of span(base + candidates) / span(base). Returns their indices.
std::vector<int> independent_columns(const RatMat& base, const RatMat& candidates);

} // namespace liext
