#include "msekr/graph.hpp"

#include "msekr/counting.hpp"
#include "msekr/enumerate.hpp"
#include "msekr/errors.hpp"

namespace msekr {

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::kneser:
      return "K";
    case GraphKind::kneser_t:
      return "Kt";
    case GraphKind::multiset:
      return "M";
    case GraphKind::multiset_t:
      return "Mt";
    case GraphKind::multiset_support:
      return "Mp";
  }
  return "?";
}

GraphKind parse_graph_kind(std::string_view text) {
  if (text == "K" || text == "kneser") {
    return GraphKind::kneser;
  }
  if (text == "Kt" || text == "kneser_t") {
    return GraphKind::kneser_t;
  }
  if (text == "M" || text == "multiset") {
    return GraphKind::multiset;
  }
  if (text == "Mt" || text == "multiset_t") {
    return GraphKind::multiset_t;
  }
  if (text == "Mp" || text == "multiset_support") {
    return GraphKind::multiset_support;
  }
  throw contract_error("unknown graph kind '" + std::string(text) +
                       "' (expected K, Kt, M, Mt or Mp)");
}

bool is_set_kind(GraphKind kind) {
  return kind == GraphKind::kneser || kind == GraphKind::kneser_t;
}

DisjointnessGraph::DisjointnessGraph(GraphKind kind, int ground, int k, int t,
                                     std::size_t vertex_cap)
    : kind_(kind), t_(t) {
  if (ground < 1 || k < 1) {
    throw contract_error("graph needs ground size >= 1 and k >= 1");
  }
  if (t < 1) {
    throw contract_error("graph threshold t must be at least 1");
  }
  if (kind == GraphKind::kneser || kind == GraphKind::multiset) {
    t_ = 1;
  }
  Count size = is_set_kind(kind) ? binomial(ground, k) : multichoose(ground, k);
  if (size > static_cast<Count>(vertex_cap)) {
    throw scale_exceeded("universe of " + to_string(size) +
                         " vertices exceeds the cap of " +
                         std::to_string(vertex_cap));
  }
  universe_ = is_set_kind(kind) ? set_universe(ground, k)
                                : multiset_universe(ground, k);

  int n = vertex_count();
  adj_.assign(static_cast<std::size_t>(n), Bitset(n));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (conflicts(vertex(u), vertex(v))) {
        adj_[idx(u)].set(v);
        adj_[idx(v)].set(u);
      }
    }
  }
}

std::size_t DisjointnessGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const Bitset& row : adj_) {
    twice += static_cast<std::size_t>(row.count());
  }
  return twice / 2;
}

bool DisjointnessGraph::conflicts(const Multiset& a, const Multiset& b) const {
  switch (kind_) {
    case GraphKind::kneser:
    case GraphKind::kneser_t:
    case GraphKind::multiset:
    case GraphKind::multiset_t:
      return intersection_size(a, b) < t_;
    case GraphKind::multiset_support:
      return support_overlap(a, b) < t_;
  }
  return false;
}

Family DisjointnessGraph::family_of(const std::vector<int>& vertices) const {
  std::vector<Multiset> members;
  members.reserve(vertices.size());
  for (int v : vertices) {
    members.push_back(vertex(v));
  }
  return Family(universe_.ground_size(), universe_.k(), universe_.kind(),
                std::move(members));
}

std::string DisjointnessGraph::name() const {
  std::string out(to_string(kind_));
  out += "(" + std::to_string(ground_size()) + "," + std::to_string(k());
  if (kind_ != GraphKind::kneser && kind_ != GraphKind::multiset) {
    out += "," + std::to_string(t_);
  }
  out += ")";
  return out;
}

}  // namespace msekr
