#pragma once

#include "liext/bigraded.hpp"

#include <map>

namespace liext {

struct PageEntry {
  int p = 0, q = 0;
  int dim = 0;
  RatMat representatives; // columns in the degree-(p+q) bigraded coordinates
};

struct Page {
  int r = 0;
  std::vector<PageEntry> entries;
  /// d_r : E_r^{p,q} -> E_r^{p+r, q-r+1}, keyed by (p, q).
  std::map<std::pair<int, int>, RatMat> d;

  int dim(int p, int q) const;
  const PageEntry* entry(int p, int q) const;
};

/// The filtration of the total complex by horizontal degree, in the bigraded
/// coordinates of the connection. Exact couples only; non-admissible couples
/// are rejected (their assembled differential does not square to zero).
class FilteredComplex {
public:
  explicit FilteredComplex(const Couple& cpl);

  int n_base() const { return nb_; }
  int n_kernel() const { return nk_; }
  int total_dim() const { return nb_ + nk_; }

  int degree_dim(int k) const;
  /// Full differential C^k -> C^{k+1} in bigraded coordinates.
  const RatMat& d(int k) const;
  /// Offset of the (p, k-p) block inside degree k, -1 when absent.
  int block_offset(int k, int p) const;
  int block_size(int k, int p) const;

  /// Z_r^{p,q} = { x in F^p C^{p+q} : dx in F^{p+r} }, as generator columns.
  RatMat Z(int r, int p, int q) const;

  Page page(int r) const;
  /// Page index at which everything has stabilized.
  int stable_r() const { return total_dim() + 1; }

private:
  int nb_, nk_;
  std::vector<RatMat> d_; // per degree 0..n
};

Page page(const Couple& cpl, int r);

struct AbutmentReport {
  std::vector<int> spectral; // sum over p+q = k of dim E_inf^{p,q}
  std::vector<int> betti;    // direct Betti numbers of the built extension
  bool ok = false;
};

AbutmentReport abutment(const Couple& cpl);

} // namespace liext
