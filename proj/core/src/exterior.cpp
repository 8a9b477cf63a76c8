#include "liext/exterior.hpp"

#include <algorithm>
#include <stdexcept>

namespace liext {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<IndexSubset> subsets(int n, int k) {
  std::vector<IndexSubset> out;
  if (k < 0 || k > n) return out;
  out.reserve(static_cast<std::size_t>(binomial(n, k)));
  IndexSubset cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  if (k == 0) out = {IndexSubset{}};
  return out;
}

std::int64_t subset_rank(int n, const IndexSubset& s) {
  const int k = static_cast<int>(s.size());
  std::int64_t rank = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < s[i]; ++v) rank += binomial(n - 1 - v, k - 1 - i);
    prev = s[i];
  }
  return rank;
}

std::optional<std::pair<int, IndexSubset>> insert_with_sign(const IndexSubset& s, int l) {
  IndexSubset out;
  out.reserve(s.size() + 1);
  int pos = 0;
  while (pos < static_cast<int>(s.size()) && s[pos] < l) ++pos;
  if (pos < static_cast<int>(s.size()) && s[pos] == l) return std::nullopt;
  out.assign(s.begin(), s.begin() + pos);
  out.push_back(l);
  out.insert(out.end(), s.begin() + pos, s.end());
  return std::make_pair(pos % 2 == 0 ? 1 : -1, out);
}

int merge_sign(const IndexSubset& a, const IndexSubset& b) {
  long inversions = 0;
  for (int x : a)
    for (int y : b)
      if (x > y) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

IndexSubset erase_at(const IndexSubset& s, int i) {
  IndexSubset out = s;
  out.erase(out.begin() + i);
  return out;
}

} // namespace liext
