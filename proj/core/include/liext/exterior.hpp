#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace liext {

/// Index bookkeeping for the canonical basis of exterior powers: a basis
/// element of degree k is a strictly increasing k-subset of {0..n-1}, listed
/// in lexicographic order. Alternation lives entirely in the sign helpers.
using IndexSubset = std::vector<int>;

std::int64_t binomial(int n, int k);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<IndexSubset> subsets(int n, int k);

/// Position of a strictly increasing subset in the lexicographic listing.
std::int64_t subset_rank(int n, const IndexSubset& s);

/// Insert index l into a strictly increasing subset. Returns the enlarged
/// subset together with the sign (-1)^pos of moving l from the front to its
/// slot; nullopt when l already occurs (wedge with a repeated factor).
std::optional<std::pair<int, IndexSubset>> insert_with_sign(const IndexSubset& s, int l);

/// Sign that sorts the concatenation (a, b) of two disjoint increasing
/// subsets into one increasing subset, i.e. the parity of pairs (x in a,
/// y in b) with x > y.
int merge_sign(const IndexSubset& a, const IndexSubset& b);

/// Complement positions: subset s with element at position i removed.
IndexSubset erase_at(const IndexSubset& s, int i);

} // namespace liext
