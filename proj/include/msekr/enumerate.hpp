#ifndef MSEKR_ENUMERATE_HPP
#define MSEKR_ENUMERATE_HPP

#include <cstdint>
#include <vector>

#include "msekr/family.hpp"
#include "msekr/multiset.hpp"

namespace msekr {

// Enumeration order is lexicographic on sorted element lists:
// {1,1}, {1,2}, ..., {1,m}, {2,2}, ... and {1,2}, {1,3}, ... for sets.
// Ranks index into that order and are what graph vertices are keyed by.

/// All multichoose(m, k) k-multisets over [m], in enumeration order.
std::vector<Multiset> enumerate_k_multisets(int m, int k);

/// All C(n, k) k-subsets of [n]; empty when k > n.
std::vector<KSet> enumerate_k_subsets(int n, int k);

/// The whole universe as a family (already canonical, no re-sort needed).
Family multiset_universe(int m, int k);
Family set_universe(int n, int k);

/// Position of `a` among the k-multisets of its ground set.
/// Throws std::overflow_error if the universe size exceeds 64 bits.
std::uint64_t rank(const Multiset& a);
std::uint64_t rank(const KSet& s);

/// Throws std::out_of_range when r >= multichoose(m, k).
Multiset unrank_multiset(int m, int k, std::uint64_t r);
/// Throws std::out_of_range when r >= C(n, k).
KSet unrank_kset(int n, int k, std::uint64_t r);

}  // namespace msekr

#endif  // MSEKR_ENUMERATE_HPP
