#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "msekr/enumerate.hpp"
#include "msekr/errors.hpp"
#include "msekr/families.hpp"
#include "msekr/graph.hpp"
#include "msekr/search.hpp"
#include "oracle.hpp"

using namespace msekr;

namespace {

std::vector<oracle::Elems> lists(const Family& f) {
  std::vector<oracle::Elems> out;
  for (const auto& a : f) out.push_back(a.elements());
  return out;
}

int oracle_mis(const DisjointnessGraph& g) {
  return oracle::mis(oracle::build_adj(
      lists(g.universe()), [&](const auto& a, const auto& b) {
        auto common = oracle::meet(a, b);
        switch (g.kind()) {
          case GraphKind::kneser:
          case GraphKind::multiset:
            return common.empty();
          case GraphKind::kneser_t:
          case GraphKind::multiset_t:
            return static_cast<int>(common.size()) < g.t();
          case GraphKind::multiset_support:
            return oracle::support_meet(a, b) < g.t();
        }
        return false;
      }));
}

}  // namespace

TEST_CASE("graph construction") {
  DisjointnessGraph k52(GraphKind::kneser, 5, 2);
  CHECK(k52.vertex_count() == 10);
  CHECK(k52.edge_count() == 15);
  DisjointnessGraph m43(GraphKind::multiset, 4, 3);
  CHECK(m43.vertex_count() == 20);

  for (int m = 2; m <= 5; ++m)
    for (int k = 1; k <= 4; ++k) {
      DisjointnessGraph a(GraphKind::multiset, m, k);
      DisjointnessGraph b(GraphKind::multiset_support, m, k, 1);
      REQUIRE(a.vertex_count() == b.vertex_count());
      for (int u = 0; u < a.vertex_count(); ++u)
        for (int v = 0; v < a.vertex_count(); ++v)
          CHECK(a.adjacent(u, v) == b.adjacent(u, v));
    }
  CHECK_THROWS_AS(DisjointnessGraph(GraphKind::multiset, 10, 6, 1, 100),
                  scale_exceeded);
  CHECK(parse_graph_kind("Mp") == GraphKind::multiset_support);
  CHECK_THROWS(parse_graph_kind("Q"));
}

TEST_CASE("independence numbers") {
  CHECK(max_independent_set(DisjointnessGraph(GraphKind::kneser, 5, 2)).optimum == 4);
  auto r = max_independent_set(DisjointnessGraph(GraphKind::multiset, 4, 3));
  CHECK(r.optimum == 10);
  CHECK(r.status == SearchStatus::proved_optimal);
  CHECK(r.witness.size() == 10);
  CHECK(is_t_intersecting(r.witness, 1));
}

TEST_CASE("independence numbers match brute force") {
  struct Case {
    GraphKind kind;
    int ground, k, t;
  };
  std::vector<Case> cases;
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k <= 3; ++k)
      for (int t = 1; t <= k; ++t)
        cases.push_back({GraphKind::kneser_t, n, k, t});
  for (int m = 2; m <= 5; ++m)
    for (int k = 1; k <= 3; ++k)
      for (int t = 1; t <= k; ++t) {
        cases.push_back({GraphKind::multiset_t, m, k, t});
        cases.push_back({GraphKind::multiset_support, m, k, t});
      }
  for (const auto& c : cases) {
    DisjointnessGraph g(c.kind, c.ground, c.k, c.t);
    if (g.vertex_count() > 40) continue;
    CAPTURE(g.name());
    auto r = max_independent_set(g);
    CHECK(r.optimum == oracle_mis(g));
    CHECK(static_cast<int>(r.witness.size()) == r.optimum);
  }
}

TEST_CASE("node limit") {
  SearchOptions opt;
  opt.node_limit = 5;
  auto r = max_independent_set(DisjointnessGraph(GraphKind::multiset, 5, 3), opt);
  CHECK(r.status == SearchStatus::node_limit_hit);
  CHECK(r.optimum <= 15);
  CHECK(is_t_intersecting(r.witness, 1));
}

TEST_CASE("enumeration of optima") {
  auto e = enumerate_maximum_independent_sets(
      DisjointnessGraph(GraphKind::multiset, 5, 3), 15, 100);
  CHECK(e.complete);
  CHECK(e.families.size() == 5);
  for (const auto& f : e.families)
    CHECK(common_intersection(f).cardinality() >= 1);

  auto capped = enumerate_maximum_independent_sets(
      DisjointnessGraph(GraphKind::multiset, 5, 3), 15, 2);
  CHECK_FALSE(capped.complete);
  CHECK(capped.families.size() == 2);
}

TEST_CASE("intersecting with empty common intersection") {
  auto r = max_intersecting_empty_common(6, 3);
  CHECK(r.optimum == 16);
  CHECK(common_intersection(r.witness).empty());
  CHECK(is_t_intersecting(r.witness, 1));
  CHECK(max_intersecting_empty_common(4, 3).optimum == 10);
  CHECK(max_intersecting_empty_common(4, 1).optimum == 0);

  // brute force over the universe for tiny cases
  for (int m = 2; m <= 4; ++m)
    for (int k = 1; k <= 2; ++k) {
      auto all = enumerate_k_multisets(m, k);
      int n = static_cast<int>(all.size());
      int best = 0;
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Multiset> pick;
        for (int i = 0; i < n; ++i)
          if (mask >> i & 1) pick.push_back(all[i]);
        Family f(m, k, FamilyKind::multiset, pick);
        if (is_t_intersecting(f, 1) && common_intersection(f).empty())
          best = std::max(best, static_cast<int>(pick.size()));
      }
      CHECK(max_intersecting_empty_common(m, k).optimum == best);
    }
}

TEST_CASE("P(s,1) families") {
  auto r = max_P_s1_family(7, 2, 2);
  CHECK(r.optimum == 13);
  CHECK(has_property_P_s1(r.witness, 2));
  for (int m = 2; m <= 5; ++m)
    for (int k = 1; k <= 3; ++k)
      CHECK(max_P_s1_family(m, k, 1).optimum ==
            max_independent_set(DisjointnessGraph(GraphKind::multiset, m, k))
                .optimum);
  auto disjoint = [](const auto& a, const auto& b) {
    return oracle::meet(a, b).empty();
  };
  for (int m = 3; m <= 5; ++m)
    for (int k = 1; k <= 2; ++k)
      for (int s = 2; s <= 3; ++s) {
        auto verts = oracle::multisets(m, k);
        if (verts.size() > 20) continue;
        CHECK(max_P_s1_family(m, k, s).optimum ==
              oracle::max_clique_free_bruteforce(verts, s, disjoint));
      }
}

TEST_CASE("union of two intersecting families") {
  auto r = max_union_two_intersecting(5, 2);
  CHECK(r.optimum == 9);
  CHECK(max_union_two_intersecting(4, 1).optimum == 2);
  auto w = r.witness;
  CHECK(has_property_P_s1(w, 2));
}

TEST_CASE("t-intersecting families") {
  auto r = max_t_intersecting(5, 4, 2, IntersectionMode::true_intersection);
  CHECK(r.optimum == 17);
  CHECK(is_t_intersecting(r.witness, 2));
  for (int m = 3; m <= 5; ++m)
    for (int k = 2; k <= 4; ++k)
      for (int t = 1; t <= k; ++t) {
        auto sup = max_t_intersecting(m, k, t, IntersectionMode::support_intersection);
        auto tru = max_t_intersecting(m, k, t, IntersectionMode::true_intersection);
        CHECK(sup.optimum <= tru.optimum);
        CHECK(is_support_t_intersecting(sup.witness, t));
      }
}

TEST_CASE("non-trivial t-intersecting families") {
  auto r = max_t_intersecting_nontrivial(5, 3, 2);
  auto all = max_t_intersecting(5, 3, 2, IntersectionMode::true_intersection);
  CHECK(r.optimum <= all.optimum);
  CHECK(r.optimum >= static_cast<int>(hm_t_multiset(5, 3, 2).size()));
  CHECK(common_intersection(r.witness).cardinality() < 2);
  CHECK(is_t_intersecting(r.witness, 2));
  CHECK_THROWS_AS(max_t_intersecting_nontrivial(5, 3, 1), contract_error);
  CHECK_THROWS_AS(max_t_intersecting_nontrivial(5, 3, 3), contract_error);
}

TEST_CASE("ak_threshold_r") {
  for (int m = 3; m <= 12; ++m)
    for (int k = 1; k <= m; ++k)
      if (m + k - 1 > 2 * k - 1) CHECK(ak_threshold_r(m, k, 1).r == 0);

  auto b = ak_threshold_r(6, 4, 2);
  CHECK(b.r == 0);
  CHECK(b.boundary);
  CHECK(b.r_next == 1);
  CHECK(frankl_set_size(9, 4, 2, 0) == frankl_set_size(9, 4, 2, 1));

  auto a = ak_threshold_r(5, 4, 2);
  CHECK(a.r == 1);
  CHECK_FALSE(a.boundary);
  CHECK_THROWS_AS(ak_threshold_r(5, 4, 5), contract_error);

  // the chosen r is the best Frankl family
  for (int m = 2; m <= 9; ++m)
    for (int k = 2; k <= 6; ++k)
      for (int t = 1; t <= k; ++t) {
        int n = m + k - 1;
        if (n <= 2 * k - t) continue;
        auto th = ak_threshold_r(m, k, t);
        Count best = 0;
        for (int r = 0; r <= k - t && t + 2 * r <= n; ++r)
          best = std::max(best, frankl_set_size(n, k, t, r));
        CHECK(frankl_set_size(n, k, t, th.r) == best);
      }
}

TEST_CASE("determinism") {
  auto a = max_independent_set(DisjointnessGraph(GraphKind::multiset_t, 5, 3, 2));
  auto b = max_independent_set(DisjointnessGraph(GraphKind::multiset_t, 5, 3, 2));
  CHECK(a.witness == b.witness);
  CHECK(a.nodes_explored == b.nodes_explored);
}
