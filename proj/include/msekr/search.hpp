#ifndef MSEKR_SEARCH_HPP
#define MSEKR_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "msekr/family.hpp"
#include "msekr/graph.hpp"

namespace msekr {

enum class SearchStatus { proved_optimal, node_limit_hit };

std::string_view to_string(SearchStatus status);

/// Vertex cap for the searches without a colouring bound (clique-free and
/// induced-bipartite subsets).
inline constexpr std::size_t kExhaustiveVertexCap = 64;

struct SearchOptions {
  std::uint64_t node_limit = 200'000'000;
  std::size_t vertex_cap = kDefaultVertexCap;
  std::size_t exhaustive_vertex_cap = kExhaustiveVertexCap;
};

struct SearchResult {
  int optimum = 0;
  Family witness;
  SearchStatus status = SearchStatus::proved_optimal;
  std::uint64_t nodes_explored = 0;
};

/// Maximum independent set by branch and bound: maximum clique in the
/// complement with a greedy colouring bound and packed-bitset candidate sets.
/// Vertices are tried in descending degree order of the complement, ties by
/// rank.
SearchResult max_independent_set(const DisjointnessGraph& graph,
                                 const SearchOptions& options = {});

/// Largest independent set whose common intersection has cardinality below
/// `core_below`. A branch is cut as soon as the elementwise minimum over the
/// partial family and every remaining candidate already reaches the limit.
SearchResult max_independent_set_small_core(const DisjointnessGraph& graph,
                                            int core_below,
                                            const SearchOptions& options = {});

struct Enumeration {
  std::vector<Family> families;
  bool complete = true;  ///< false when the cap or node limit cut it short
  std::uint64_t nodes_explored = 0;
};

/// Every independent set of size `optimum` (each reported once), up to
/// `cap` of them. With `core_below`, only sets whose common intersection is
/// smaller than that are reported.
Enumeration enumerate_maximum_independent_sets(
    const DisjointnessGraph& graph, int optimum, std::size_t cap,
    std::optional<int> core_below = std::nullopt,
    const SearchOptions& options = {});

/// Largest vertex subset inducing no clique on s + 1 vertices. s = 1 is the
/// independent set problem.
SearchResult max_clique_free_subset(const DisjointnessGraph& graph, int s,
                                    const SearchOptions& options = {});

/// Largest vertex subset inducing a bipartite subgraph.
SearchResult max_induced_bipartite(const DisjointnessGraph& graph,
                                   const SearchOptions& options = {});

// Multiset wrappers.

/// Largest intersecting family of k-multisets of [m] with empty common
/// intersection. Zero when no such family exists.
SearchResult max_intersecting_empty_common(int m, int k,
                                           const SearchOptions& options = {});

/// Largest family of k-multisets with no s + 1 pairwise disjoint members.
SearchResult max_P_s1_family(int m, int k, int s,
                             const SearchOptions& options = {});

/// Largest union of two intersecting families of k-multisets.
SearchResult max_union_two_intersecting(int m, int k,
                                        const SearchOptions& options = {});

enum class IntersectionMode { true_intersection, support_intersection };

/// Largest t-intersecting family of k-multisets of [m], counting either full
/// multiset intersections or support overlaps.
SearchResult max_t_intersecting(int m, int k, int t, IntersectionMode mode,
                                const SearchOptions& options = {});

/// Largest t-intersecting family whose common intersection has fewer than t
/// elements. Requires 1 < t < k.
SearchResult max_t_intersecting_nontrivial(int m, int k, int t,
                                           const SearchOptions& options = {});

/// Which Frankl family is extremal for n = m + k - 1.
struct AkThreshold {
  int r = 0;
  bool boundary = false;  ///< n sits on the lower end of r's interval
  int r_next = 0;         ///< the tied neighbour when boundary is set
};

/// The r in [0, k - t] whose open interval
///   (k-t+1)(2 + (t-1)/(r+1)) < n < (k-t+1)(2 + (t-1)/r)
/// contains n = m + k - 1 (upper end infinite at r = 0), or the tied pair
/// (r, r+1) when n equals the lower end. Exact integer arithmetic. Requires
/// 1 <= t <= k and n > 2k - t (below that every pair of k-sets of [n]
/// t-intersects). For m < 2k - t the Frankl family for r may not fit in [m].
AkThreshold ak_threshold_r(int m, int k, int t);

}  // namespace msekr

#endif  // MSEKR_SEARCH_HPP
