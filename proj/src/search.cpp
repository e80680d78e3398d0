#include "msekr/search.hpp"

#include <algorithm>
#include <numeric>

#include "msekr/counting.hpp"
#include "msekr/errors.hpp"

namespace msekr {

std::string_view to_string(SearchStatus status) {
  return status == SearchStatus::proved_optimal ? "proved_optimal"
                                                : "node_limit_hit";
}

namespace {

// ---------------------------------------------------------------------------
// Graph-free validation of witnesses against the raw pairwise predicate.

std::vector<std::vector<bool>> raw_conflicts(const DisjointnessGraph& graph,
                                             const Family& family) {
  std::size_t n = family.size();
  std::vector<std::vector<bool>> c(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      bool x = graph.conflicts(family[a], family[b]);
      c[a][b] = x;
      c[b][a] = x;
    }
  }
  return c;
}

bool raw_has_clique(const std::vector<std::vector<bool>>& c,
                    std::vector<std::size_t>& chosen, std::size_t from,
                    int need) {
  if (need == 0) {
    return true;
  }
  for (std::size_t v = from; v < c.size(); ++v) {
    bool ok = std::all_of(chosen.begin(), chosen.end(),
                          [&](std::size_t u) { return c[u][v]; });
    if (!ok) {
      continue;
    }
    chosen.push_back(v);
    bool found = raw_has_clique(c, chosen, v + 1, need - 1);
    chosen.pop_back();
    if (found) {
      return true;
    }
  }
  return false;
}

bool raw_bipartite(const std::vector<std::vector<bool>>& c) {
  std::size_t n = c.size();
  std::vector<int> side(n, -1);
  for (std::size_t root = 0; root < n; ++root) {
    if (side[root] != -1) {
      continue;
    }
    side[root] = 0;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v) {
        if (!c[u][v]) {
          continue;
        }
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          stack.push_back(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

void check_witness(bool ok, const std::string& what) {
  if (!ok) {
    throw internal_invariant_error("search witness failed validation: " + what);
  }
}

void validate_independent(const DisjointnessGraph& graph, const Family& w,
                          std::optional<int> core_below) {
  auto c = raw_conflicts(graph, w);
  std::vector<std::size_t> chosen;
  check_witness(!raw_has_clique(c, chosen, 0, 2), "conflicting pair");
  if (core_below && !w.empty()) {
    check_witness(common_intersection(w).cardinality() < *core_below,
                  "common intersection too large");
  }
}

int sum_of(const std::vector<int>& v) {
  return std::accumulate(v.begin(), v.end(), 0);
}

// ---------------------------------------------------------------------------
// Maximum clique in the complement (independent set in the graph).

class IndependentSetEngine {
 public:
  IndependentSetEngine(const DisjointnessGraph& graph,
                       std::optional<int> core_below, std::uint64_t node_limit)
      : graph_(graph), core_below_(core_below), node_limit_(node_limit) {
    int n = graph.vertex_count();
    order_.resize(static_cast<std::size_t>(n));
    std::iota(order_.begin(), order_.end(), 0);
    std::vector<int> compat_degree(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      compat_degree[static_cast<std::size_t>(v)] = n - 1 - graph.degree(v);
    }
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return compat_degree[static_cast<std::size_t>(a)] >
             compat_degree[static_cast<std::size_t>(b)];
    });
    compat_.assign(static_cast<std::size_t>(n), Bitset(n));
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        if (p != q && !graph.adjacent(at(p), at(q))) {
          compat_[static_cast<std::size_t>(p)].set(q);
        }
      }
    }
    if (core_below_) {
      counts_.reserve(static_cast<std::size_t>(n));
      for (int p = 0; p < n; ++p) {
        auto c = graph.vertex(at(p)).counts();
        counts_.emplace_back(c.begin(), c.end());
      }
    }
  }

  void maximize() {
    enumerating_ = false;
    run();
  }

  void enumerate(int target, std::size_t cap) {
    enumerating_ = true;
    target_ = target;
    cap_ = cap;
    run();
  }

  bool aborted_by_limit() const { return limit_hit_; }
  bool aborted_by_cap() const { return cap_hit_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<int>& best() const { return best_; }
  const std::vector<std::vector<int>>& found() const { return found_; }

 private:
  int at(int position) const { return order_[static_cast<std::size_t>(position)]; }

  void run() {
    int n = graph_.vertex_count();
    Bitset all(n);
    all.set_all();
    std::vector<int> core(static_cast<std::size_t>(graph_.ground_size()),
                          graph_.k());
    if (n > 0 && !(core_below_ && core_blocked(core, all))) {
      expand(all, core);
    }
  }

  // Greedy sequential colouring of the candidates; colour classes are
  // pairwise conflicting, so each contributes at most one vertex.
  void colour(const Bitset& candidates, std::vector<int>& order,
              std::vector<int>& bound) const {
    Bitset uncoloured = candidates;
    int colour = 0;
    while (uncoloured.any()) {
      ++colour;
      Bitset q = uncoloured;
      for (int v = q.first(); v != -1; v = q.first()) {
        uncoloured.reset(v);
        q.reset(v);
        q.subtract(compat_[static_cast<std::size_t>(v)]);
        order.push_back(v);
        bound.push_back(colour);
      }
    }
  }

  bool core_blocked(const std::vector<int>& core, const Bitset& candidates) const {
    std::vector<int> forced = core;
    int total = sum_of(forced);
    if (total < *core_below_) {
      return false;
    }
    bool blocked = true;
    candidates.for_each([&](int p) {
      if (!blocked) {
        return;
      }
      const auto& c = counts_[static_cast<std::size_t>(p)];
      for (std::size_t e = 0; e < forced.size(); ++e) {
        if (c[e] < forced[e]) {
          total -= forced[e] - c[e];
          forced[e] = c[e];
        }
      }
      blocked = total >= *core_below_;
    });
    return blocked;
  }

  void record() {
    std::vector<int> vertices;
    vertices.reserve(current_.size());
    for (int p : current_) {
      vertices.push_back(at(p));
    }
    std::sort(vertices.begin(), vertices.end());
    if (enumerating_) {
      if (found_.size() >= cap_) {
        cap_hit_ = true;
        return;
      }
      found_.push_back(std::move(vertices));
    } else {
      best_ = std::move(vertices);
    }
  }

  void expand(const Bitset& candidates, const std::vector<int>& core) {
    if (++nodes_ > node_limit_) {
      limit_hit_ = true;
      return;
    }
    std::vector<int> order;
    std::vector<int> bound;
    colour(candidates, order, bound);
    Bitset remaining = candidates;
    for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
      if (limit_hit_ || cap_hit_) {
        return;
      }
      int size = static_cast<int>(current_.size());
      int reach = size + bound[static_cast<std::size_t>(idx)];
      if (enumerating_ ? reach < target_
                       : reach <= static_cast<int>(best_.size())) {
        return;
      }
      int v = order[static_cast<std::size_t>(idx)];
      current_.push_back(v);
      Bitset next = remaining & compat_[static_cast<std::size_t>(v)];

      std::vector<int> child_core;
      bool feasible = true;
      if (core_below_) {
        child_core = core;
        const auto& c = counts_[static_cast<std::size_t>(v)];
        for (std::size_t e = 0; e < child_core.size(); ++e) {
          child_core[e] = std::min(child_core[e], c[e]);
        }
        feasible = sum_of(child_core) < *core_below_;
      }
      int now = size + 1;
      if (feasible) {
        if (enumerating_ ? now == target_
                         : now > static_cast<int>(best_.size())) {
          record();
        }
      }
      if (next.any() && !(core_below_ && core_blocked(child_core, next))) {
        expand(next, child_core);
      }
      current_.pop_back();
      remaining.reset(v);
    }
  }

  const DisjointnessGraph& graph_;
  std::optional<int> core_below_;
  std::uint64_t node_limit_;
  std::vector<int> order_;
  std::vector<Bitset> compat_;
  std::vector<std::vector<int>> counts_;

  bool enumerating_ = false;
  int target_ = 0;
  std::size_t cap_ = 0;

  std::vector<int> current_;
  std::vector<int> best_;
  std::vector<std::vector<int>> found_;
  std::uint64_t nodes_ = 0;
  bool limit_hit_ = false;
  bool cap_hit_ = false;
};

SearchResult run_independent(const DisjointnessGraph& graph,
                             std::optional<int> core_below,
                             const SearchOptions& options) {
  IndependentSetEngine engine(graph, core_below, options.node_limit);
  engine.maximize();
  SearchResult out;
  out.witness = graph.family_of(engine.best());
  out.optimum = static_cast<int>(out.witness.size());
  out.status = engine.aborted_by_limit() ? SearchStatus::node_limit_hit
                                         : SearchStatus::proved_optimal;
  out.nodes_explored = engine.nodes();
  validate_independent(graph, out.witness, core_below);
  return out;
}

// ---------------------------------------------------------------------------
// Greedy clique cover of a candidate set in the graph itself.

template <typename F>
void clique_cover(const DisjointnessGraph& graph, const Bitset& candidates,
                  F&& on_class) {
  Bitset uncovered = candidates;
  while (uncovered.any()) {
    int v = uncovered.first();
    Bitset cls(graph.vertex_count());
    cls.set(v);
    Bitset extend = uncovered & graph.neighbours(v);
    for (int w = extend.first(); w != -1; w = extend.first()) {
      cls.set(w);
      extend.reset(w);
      extend &= graph.neighbours(w);
    }
    uncovered.subtract(cls);
    on_class(cls);
  }
}

void check_exhaustive_cap(const DisjointnessGraph& graph,
                          const SearchOptions& options) {
  if (static_cast<std::size_t>(graph.vertex_count()) >
      options.exhaustive_vertex_cap) {
    throw scale_exceeded("exhaustive subgraph search limited to " +
                         std::to_string(options.exhaustive_vertex_cap) +
                         " vertices, " + graph.name() + " has " +
                         std::to_string(graph.vertex_count()));
  }
}

// ---------------------------------------------------------------------------
// Largest induced subgraph without a clique on s + 1 vertices.

class CliqueFreeEngine {
 public:
  CliqueFreeEngine(const DisjointnessGraph& graph, int s,
                   std::uint64_t node_limit)
      : graph_(graph), s_(s), node_limit_(node_limit) {}

  void run() {
    int n = graph_.vertex_count();
    Bitset chosen(n);
    Bitset all(n);
    all.set_all();
    best_ = chosen;
    branch(chosen, 0, all);
  }

  const Bitset& best() const { return best_; }
  int best_size() const { return best_size_; }
  bool limit_hit() const { return limit_hit_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool has_clique(const Bitset& pool, int q) const {
    if (q == 0) {
      return true;
    }
    if (pool.count() < q) {
      return false;
    }
    Bitset rest = pool;
    for (int x = rest.first(); x != -1; x = rest.first()) {
      rest.reset(x);
      if (has_clique(rest & graph_.neighbours(x), q - 1)) {
        return true;
      }
    }
    return false;
  }

  int bound(const Bitset& candidates) const {
    int total = 0;
    clique_cover(graph_, candidates,
                 [&](const Bitset& cls) { total += std::min(cls.count(), s_); });
    return total;
  }

  void branch(const Bitset& chosen, int size, Bitset candidates) {
    while (true) {
      if (++nodes_ > node_limit_) {
        limit_hit_ = true;
        return;
      }
      if (size > best_size_) {
        best_size_ = size;
        best_ = chosen;
      }
      if (candidates.none() || size + bound(candidates) <= best_size_) {
        return;
      }
      int v = candidates.first();
      candidates.reset(v);

      Bitset with = chosen;
      with.set(v);
      Bitset next = candidates;
      Bitset risky = candidates & graph_.neighbours(v);
      Bitset around_v = chosen & graph_.neighbours(v);
      risky.for_each([&](int u) {
        if (has_clique(around_v & graph_.neighbours(u), s_ - 1)) {
          next.reset(u);
        }
      });
      branch(with, size + 1, next);
      if (limit_hit_) {
        return;
      }
      // Exclude v: continue with the same chosen set.
    }
  }

  const DisjointnessGraph& graph_;
  int s_;
  std::uint64_t node_limit_;
  Bitset best_;
  int best_size_ = 0;
  std::uint64_t nodes_ = 0;
  bool limit_hit_ = false;
};

// ---------------------------------------------------------------------------
// Largest induced bipartite subgraph: two independent sides.

class BipartiteEngine {
 public:
  BipartiteEngine(const DisjointnessGraph& graph, std::uint64_t node_limit)
      : graph_(graph), node_limit_(node_limit) {}

  void run() {
    int n = graph_.vertex_count();
    Bitset empty(n);
    Bitset all(n);
    all.set_all();
    best_ = empty;
    branch(empty, empty, all, all, 0);
  }

  const Bitset& best() const { return best_; }
  bool limit_hit() const { return limit_hit_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  // A clique holds at most one vertex of each side.
  int bound(const Bitset& can_a, const Bitset& can_b) const {
    Bitset candidates = can_a;
    candidates |= can_b;
    int total = 0;
    clique_cover(graph_, candidates, [&](const Bitset& cls) {
      total += (cls.intersects(can_a) ? 1 : 0) + (cls.intersects(can_b) ? 1 : 0);
    });
    return total;
  }

  void branch(const Bitset& side_a, const Bitset& side_b, Bitset can_a,
              Bitset can_b, int size) {
    while (true) {
      if (++nodes_ > node_limit_) {
        limit_hit_ = true;
        return;
      }
      if (size > best_size_) {
        best_size_ = size;
        best_ = side_a;
        best_ |= side_b;
      }
      Bitset candidates = can_a;
      candidates |= can_b;
      if (candidates.none() || size + bound(can_a, can_b) <= best_size_) {
        return;
      }
      int v = candidates.first();
      can_a.reset(v);
      can_b.reset(v);
      if (fits(v, side_a)) {
        Bitset a2 = side_a;
        a2.set(v);
        Bitset ca = can_a;
        ca.subtract(graph_.neighbours(v));
        branch(a2, side_b, ca, can_b, size + 1);
        if (limit_hit_) {
          return;
        }
      }
      // Mirror image of the first placement; skip it while both sides are
      // empty.
      if ((side_a.any() || side_b.any()) && fits(v, side_b)) {
        Bitset b2 = side_b;
        b2.set(v);
        Bitset cb = can_b;
        cb.subtract(graph_.neighbours(v));
        branch(side_a, b2, can_a, cb, size + 1);
        if (limit_hit_) {
          return;
        }
      }
    }
  }

  bool fits(int v, const Bitset& side) const {
    return !graph_.neighbours(v).intersects(side);
  }

  const DisjointnessGraph& graph_;
  std::uint64_t node_limit_;
  Bitset best_;
  int best_size_ = 0;
  std::uint64_t nodes_ = 0;
  bool limit_hit_ = false;
};

std::vector<int> members_of(const Bitset& b) {
  std::vector<int> out;
  b.for_each([&](int v) { out.push_back(v); });
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) {
    throw contract_error(what);
  }
}

}  // namespace

SearchResult max_independent_set(const DisjointnessGraph& graph,
                                 const SearchOptions& options) {
  return run_independent(graph, std::nullopt, options);
}

SearchResult max_independent_set_small_core(const DisjointnessGraph& graph,
                                            int core_below,
                                            const SearchOptions& options) {
  require(core_below >= 1, "core limit must be at least 1");
  return run_independent(graph, core_below, options);
}

Enumeration enumerate_maximum_independent_sets(const DisjointnessGraph& graph,
                                               int optimum, std::size_t cap,
                                               std::optional<int> core_below,
                                               const SearchOptions& options) {
  require(optimum >= 1, "optimum must be positive");
  IndependentSetEngine engine(graph, core_below, options.node_limit);
  engine.enumerate(optimum, cap);
  Enumeration out;
  out.complete = !engine.aborted_by_limit() && !engine.aborted_by_cap();
  out.nodes_explored = engine.nodes();
  for (const auto& vertices : engine.found()) {
    out.families.push_back(graph.family_of(vertices));
    validate_independent(graph, out.families.back(), core_below);
  }
  return out;
}

SearchResult max_clique_free_subset(const DisjointnessGraph& graph, int s,
                                    const SearchOptions& options) {
  require(s >= 1, "s must be at least 1");
  if (s == 1) {
    return max_independent_set(graph, options);
  }
  check_exhaustive_cap(graph, options);
  CliqueFreeEngine engine(graph, s, options.node_limit);
  engine.run();
  SearchResult out;
  out.witness = graph.family_of(members_of(engine.best()));
  out.optimum = static_cast<int>(out.witness.size());
  out.status = engine.limit_hit() ? SearchStatus::node_limit_hit
                                  : SearchStatus::proved_optimal;
  out.nodes_explored = engine.nodes();
  auto c = raw_conflicts(graph, out.witness);
  std::vector<std::size_t> chosen;
  check_witness(!raw_has_clique(c, chosen, 0, s + 1), "contains a forbidden clique");
  return out;
}

SearchResult max_induced_bipartite(const DisjointnessGraph& graph,
                                   const SearchOptions& options) {
  check_exhaustive_cap(graph, options);
  BipartiteEngine engine(graph, options.node_limit);
  engine.run();
  SearchResult out;
  out.witness = graph.family_of(members_of(engine.best()));
  out.optimum = static_cast<int>(out.witness.size());
  out.status = engine.limit_hit() ? SearchStatus::node_limit_hit
                                  : SearchStatus::proved_optimal;
  out.nodes_explored = engine.nodes();
  check_witness(raw_bipartite(raw_conflicts(graph, out.witness)),
                "induced subgraph is not bipartite");
  return out;
}

SearchResult max_intersecting_empty_common(int m, int k,
                                           const SearchOptions& options) {
  DisjointnessGraph graph(GraphKind::multiset, m, k, 1, options.vertex_cap);
  SearchResult out = max_independent_set_small_core(graph, 1, options);
  check_witness(out.witness.empty() ||
                    (is_t_intersecting(out.witness, 1) &&
                     common_intersection(out.witness).empty()),
                "not an intersecting family with empty common intersection");
  return out;
}

SearchResult max_P_s1_family(int m, int k, int s, const SearchOptions& options) {
  DisjointnessGraph graph(GraphKind::multiset, m, k, 1, options.vertex_cap);
  SearchResult out = max_clique_free_subset(graph, s, options);
  check_witness(has_property_P_s1(out.witness, s), "violates P(s,1)");
  return out;
}

SearchResult max_union_two_intersecting(int m, int k,
                                        const SearchOptions& options) {
  DisjointnessGraph graph(GraphKind::multiset, m, k, 1, options.vertex_cap);
  return max_induced_bipartite(graph, options);
}

SearchResult max_t_intersecting(int m, int k, int t, IntersectionMode mode,
                                const SearchOptions& options) {
  require(t >= 1 && t <= k, "max_t_intersecting needs 1 <= t <= k");
  GraphKind kind = mode == IntersectionMode::true_intersection
                       ? GraphKind::multiset_t
                       : GraphKind::multiset_support;
  DisjointnessGraph graph(kind, m, k, t, options.vertex_cap);
  SearchResult out = max_independent_set(graph, options);
  check_witness(mode == IntersectionMode::true_intersection
                    ? is_t_intersecting(out.witness, t)
                    : is_support_t_intersecting(out.witness, t),
                "not t-intersecting");
  return out;
}

SearchResult max_t_intersecting_nontrivial(int m, int k, int t,
                                           const SearchOptions& options) {
  require(1 < t && t < k, "nontrivial t-intersecting search needs 1 < t < k");
  DisjointnessGraph graph(GraphKind::multiset_t, m, k, t, options.vertex_cap);
  SearchResult out = max_independent_set_small_core(graph, t, options);
  check_witness(out.witness.empty() ||
                    (is_t_intersecting(out.witness, t) &&
                     common_intersection(out.witness).cardinality() < t),
                "not a nontrivial t-intersecting family");
  return out;
}

AkThreshold ak_threshold_r(int m, int k, int t) {
  require(1 <= t && t <= k, "ak_threshold_r needs 1 <= t <= k");
  require(m + k - 1 > 2 * k - t, "ak_threshold_r needs m + k - 1 > 2k - t");
  // Compare n against (k-t+1)(2 + (t-1)/d) as n*d vs (k-t+1)(2d + t - 1).
  std::int64_t n = m + k - 1;
  std::int64_t w = k - t + 1;
  auto cmp_end = [&](std::int64_t d) {
    std::int64_t lhs = n * d;
    std::int64_t rhs = w * (2 * d + t - 1);
    return (lhs > rhs) - (lhs < rhs);
  };
  for (int r = 0; r <= k - t; ++r) {
    int lower = cmp_end(r + 1);
    if (lower == 0) {
      if (r + 1 <= k - t) {
        return AkThreshold{r, true, r + 1};
      }
      return AkThreshold{r, false, r};
    }
    bool below_upper = r == 0 || cmp_end(r) < 0;
    if (lower > 0 && below_upper) {
      return AkThreshold{r, false, r};
    }
  }
  throw internal_invariant_error("no Frankl index fits m=" + std::to_string(m) +
                                 ", k=" + std::to_string(k) +
                                 ", t=" + std::to_string(t));
}

}  // namespace msekr
