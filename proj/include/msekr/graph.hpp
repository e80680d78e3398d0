#ifndef MSEKR_GRAPH_HPP
#define MSEKR_GRAPH_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "msekr/bitset.hpp"
#include "msekr/family.hpp"

namespace msekr {

/// Which pairs of the universe are joined by an edge.
enum class GraphKind {
  kneser,           ///< K(n,k): k-subsets of [n], edge iff disjoint
  kneser_t,         ///< K(n,k,t): k-subsets, edge iff |A ∩ B| < t
  multiset,         ///< M(m,k): k-multisets of [m], edge iff disjoint
  multiset_t,       ///< k-multisets, edge iff |A ∩ B| < t with multiplicity
  multiset_support  ///< M'(m,k,t): k-multisets, edge iff supports share < t
};

std::string_view to_string(GraphKind kind);
/// Accepts K, Kt, M, Mt, Mp (and the long enum names).
GraphKind parse_graph_kind(std::string_view text);
bool is_set_kind(GraphKind kind);

inline constexpr std::size_t kDefaultVertexCap = 5000;

/// Vertices are the enumerated universe (vertex v is the member of rank v);
/// adjacency is a packed bitset per vertex.
class DisjointnessGraph {
 public:
  /// ground is n for set kinds and m for multiset kinds. t is ignored for the
  /// plain disjointness kinds. Throws scale_exceeded when the universe is
  /// larger than `vertex_cap`.
  DisjointnessGraph(GraphKind kind, int ground, int k, int t = 1,
                    std::size_t vertex_cap = kDefaultVertexCap);

  GraphKind kind() const noexcept { return kind_; }
  int ground_size() const noexcept { return universe_.ground_size(); }
  int k() const noexcept { return universe_.k(); }
  int t() const noexcept { return t_; }

  int vertex_count() const noexcept {
    return static_cast<int>(universe_.size());
  }
  std::size_t edge_count() const noexcept;
  const Family& universe() const noexcept { return universe_; }
  const Multiset& vertex(int v) const {
    return universe_[static_cast<std::size_t>(v)];
  }

  bool adjacent(int u, int v) const noexcept { return adj_[idx(u)].test(v); }
  const Bitset& neighbours(int v) const noexcept { return adj_[idx(v)]; }
  int degree(int v) const noexcept { return adj_[idx(v)].count(); }

  /// The pairwise predicate the edges encode, evaluated on raw members.
  bool conflicts(const Multiset& a, const Multiset& b) const;

  /// Family made of the given vertices.
  Family family_of(const std::vector<int>& vertices) const;

  std::string name() const;

 private:
  static std::size_t idx(int v) noexcept { return static_cast<std::size_t>(v); }

  GraphKind kind_;
  int t_;
  Family universe_;
  std::vector<Bitset> adj_;
};

}  // namespace msekr

#endif  // MSEKR_GRAPH_HPP
