#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>
#include <stdexcept>

#include "msekr/counting.hpp"
#include "msekr/enumerate.hpp"
#include "msekr/errors.hpp"
#include "msekr/family.hpp"
#include "msekr/family_io.hpp"
#include "msekr/multiset.hpp"
#include "oracle.hpp"

using namespace msekr;

namespace {

Multiset ms(int m, std::initializer_list<int> e) {
  return Multiset::from_elements(m, e);
}

Family mfam(int m, int k, std::vector<Multiset> members) {
  return Family(m, k, FamilyKind::multiset, std::move(members));
}

}  // namespace

TEST_CASE("multiplicity") {
  CHECK(ms(3, {1, 1, 3}).multiplicity(1) == 2);
  CHECK(ms(3, {1, 1, 3}).multiplicity(2) == 0);
  CHECK(ms(4, {1, 2, 2, 2}).multiplicity(2) == 3);
  CHECK_THROWS_AS(ms(3, {1}).multiplicity(4), std::out_of_range);
  CHECK_THROWS_AS(ms(3, {1}).multiplicity(0), std::out_of_range);
}

TEST_CASE("cardinality") {
  CHECK(Multiset(3).cardinality() == 0);
  CHECK(ms(3, {1, 1, 3}).cardinality() == 3);
  CHECK(ms(5, {2, 2, 2, 2}).cardinality() == 4);
}

TEST_CASE("constructor rejects bad input") {
  CHECK_THROWS_AS(Multiset(std::vector<int>{1, -1}), contract_error);
  CHECK_THROWS_AS(ms(3, {4}), std::out_of_range);
  CHECK_THROWS_AS(KSet(4, {1, 1}), contract_error);
}

TEST_CASE("intersect") {
  CHECK(intersect(ms(2, {1, 1, 2}), ms(2, {1, 2, 2})) == ms(2, {1, 2}));
  auto a = ms(4, {1, 2, 2, 4});
  CHECK(intersect(a, a) == a);
  CHECK(intersect(ms(4, {1, 1, 1, 1}), ms(4, {2, 2, 2, 2})).empty());
  CHECK_THROWS_AS(intersect(ms(3, {1}), ms(4, {1})), contract_error);
}

TEST_CASE("support") {
  CHECK(support(ms(3, {1, 1, 3})) == KSet(3, {1, 3}));
  CHECK(support(Multiset(3)).size() == 0);
  CHECK(support(ms(5, {2, 2, 2, 2})) == KSet(5, {2}));
}

TEST_CASE("is_t_intersecting") {
  CHECK(is_t_intersecting(mfam(2, 2, {ms(2, {1, 1}), ms(2, {1, 2})}), 1));
  CHECK(is_t_intersecting(
      mfam(4, 4, {ms(4, {1, 1, 2, 3}), ms(4, {2, 3, 4, 4})}), 2));
  CHECK_FALSE(is_t_intersecting(mfam(2, 2, {ms(2, {1, 1}), ms(2, {2, 2})}), 1));
  CHECK_THROWS_AS(is_t_intersecting(mfam(2, 2, {}), 0), contract_error);
}

TEST_CASE("is_support_t_intersecting") {
  CHECK_FALSE(is_support_t_intersecting(
      mfam(3, 3, {ms(3, {1, 1, 2}), ms(3, {1, 1, 3})}), 2));
  CHECK(is_support_t_intersecting(
      mfam(4, 3, {ms(4, {1, 2, 3}), ms(4, {1, 2, 4})}), 2));
  CHECK(is_support_t_intersecting(mfam(4, 3, {ms(4, {1, 1, 1})}), 3));
}

TEST_CASE("common_intersection") {
  CHECK(common_intersection(mfam(3, 3, {ms(3, {1, 1, 2}), ms(3, {1, 1, 3})})) ==
        ms(3, {1, 1}));
  CHECK(common_intersection(mfam(4, 2, {ms(4, {1, 2}), ms(4, {3, 4})})).empty());
  CHECK(common_intersection(mfam(4, 2, {ms(4, {2, 3})})) == ms(4, {2, 3}));
  CHECK_THROWS_AS(common_intersection(mfam(4, 2, {})), contract_error);
}

TEST_CASE("has_property_P_s1") {
  CHECK_FALSE(has_property_P_s1(multiset_universe(5, 2), 2));
  CHECK(has_property_P_s1(mfam(3, 2, {ms(3, {1, 1}), ms(3, {1, 2})}), 1));

  // all 2-multisets of [7] meeting {1,2}; triple scan oracle
  std::vector<Multiset> hit;
  for (const auto& a : enumerate_k_multisets(7, 2))
    if (a.multiplicity(1) + a.multiplicity(2) > 0) hit.push_back(a);
  auto fam = mfam(7, 2, hit);
  bool triple = false;
  for (std::size_t a = 0; a < hit.size(); ++a)
    for (std::size_t b = a + 1; b < hit.size(); ++b)
      for (std::size_t c = b + 1; c < hit.size(); ++c)
        if (intersection_size(hit[a], hit[b]) == 0 &&
            intersection_size(hit[a], hit[c]) == 0 &&
            intersection_size(hit[b], hit[c]) == 0)
          triple = true;
  CHECK_FALSE(triple);
  CHECK(has_property_P_s1(fam, 2));
  CHECK_FALSE(has_property_P_s1(fam, 1));
}

TEST_CASE("enumeration counts and order") {
  CHECK(enumerate_k_multisets(3, 2).size() == 6);
  CHECK(enumerate_k_multisets(5, 4).size() == 70);
  auto one = enumerate_k_multisets(1, 3);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == ms(1, {1, 1, 1}));

  CHECK(enumerate_k_subsets(4, 2).size() == 6);
  auto full = enumerate_k_subsets(5, 5);
  REQUIRE(full.size() == 1);
  CHECK(full[0] == KSet(5, {1, 2, 3, 4, 5}));
  CHECK(enumerate_k_subsets(8, 4).size() == 70);
  CHECK(enumerate_k_subsets(3, 4).empty());

  for (int m = 1; m <= 7; ++m)
    for (int k = 0; k <= 6; ++k) {
      auto got = enumerate_k_multisets(m, k);
      auto want = oracle::multisets(m, k);
      REQUIRE(got.size() == want.size());
      CHECK(got.size() == oracle::choose(m + k - 1, k));
      for (std::size_t i = 0; i < got.size(); ++i)
        CHECK(got[i].elements() == want[i]);
    }
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      auto got = enumerate_k_subsets(n, k);
      auto want = oracle::subsets(n, k);
      REQUIRE(got.size() == want.size());
      for (std::size_t i = 0; i < got.size(); ++i)
        CHECK(std::vector<int>(got[i].members().begin(),
                               got[i].members().end()) == want[i]);
    }
}

TEST_CASE("rank and unrank") {
  auto universe = enumerate_k_multisets(4, 3);
  CHECK(unrank_multiset(4, 3, 0) == universe.front());
  CHECK(rank(universe.back()) == universe.size() - 1);
  for (std::size_t i = 0; i < universe.size(); ++i) {
    CHECK(rank(universe[i]) == i);
    CHECK(unrank_multiset(4, 3, i) == universe[i]);
  }
  CHECK_THROWS_AS(unrank_multiset(4, 3, universe.size()), std::out_of_range);

  auto sets = enumerate_k_subsets(7, 3);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    CHECK(rank(sets[i]) == i);
    CHECK(unrank_kset(7, 3, i) == sets[i]);
  }
  CHECK_THROWS_AS(unrank_kset(7, 3, 35), std::out_of_range);
}

TEST_CASE("binomial and multichoose") {
  CHECK(multichoose(5, 4) == 70);
  for (int m = 0; m < 10; ++m) CHECK(multichoose(m, 0) == 1);
  CHECK(binomial(7, 2) == 21);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(5, -1) == 0);
  for (int n = 0; n <= 60; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == oracle::choose(n, k));
  for (int m = 1; m <= 20; ++m)
    for (int k = 0; k <= 20; ++k)
      CHECK(multichoose(m, k) == binomial(m + k - 1, k));

  // exceeds 64 bits but fits in 128
  Count big = multichoose(50, 50);
  CHECK(big == binomial(99, 50));
  CHECK_THROWS_AS(to_u64(big), std::overflow_error);
  CHECK(to_string(big) == "50445672272782096667406248628");
  CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
  CHECK_THROWS_AS(checked_sub(1, 2), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(~Count{0}, 2), std::overflow_error);
  CHECK_THROWS_AS(checked_add(~Count{0}, 1), std::overflow_error);
}

TEST_CASE("exhaustive multiset algebra") {
  for (int m = 1; m <= 5; ++m)
    for (int k = 1; k <= 5; ++k) {
      auto all = enumerate_k_multisets(m, k);
      for (const auto& a : all)
        for (const auto& b : all) {
          auto ab = intersect(a, b);
          auto want = oracle::meet(a.elements(), b.elements());
          CHECK(ab.elements() == want);
          CHECK(ab.cardinality() <= std::min(a.cardinality(), b.cardinality()));
          CHECK(ab == intersect(b, a));
          CHECK(support(ab) == set_intersection(support(a), support(b)));
          CHECK(intersection_size(a, b) == ab.cardinality());
          CHECK(support_overlap(a, b) ==
                oracle::support_meet(a.elements(), b.elements()));
        }
    }
  auto all = enumerate_k_multisets(3, 3);
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all)
        CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
}

TEST_CASE("random families: predicate implications") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    int m = 2 + static_cast<int>(rng() % 4);
    int k = 1 + static_cast<int>(rng() % 4);
    auto all = enumerate_k_multisets(m, k);
    std::vector<Multiset> pick;
    for (const auto& a : all)
      if (rng() % 4 == 0) pick.push_back(a);
    if (pick.empty()) pick.push_back(all[0]);
    Family f(m, k, FamilyKind::multiset, pick);
    for (int t = 2; t <= k; ++t)
      if (is_t_intersecting(f, t)) CHECK(is_t_intersecting(f, t - 1));
    for (int t = 1; t <= k; ++t)
      if (is_support_t_intersecting(f, t)) CHECK(is_t_intersecting(f, t));
  }
}

TEST_CASE("family construction") {
  CHECK_THROWS_AS(mfam(3, 2, {ms(3, {1, 2}), ms(3, {1, 2})}), contract_error);
  CHECK_THROWS_AS(mfam(3, 2, {ms(3, {1, 2, 3})}), contract_error);
  CHECK_THROWS_AS(Family(3, 2, FamilyKind::set, {ms(3, {1, 1})}),
                  contract_error);
  auto f = mfam(3, 2, {ms(3, {2, 3}), ms(3, {1, 1})});
  CHECK(f[0] == ms(3, {1, 1}));
}

TEST_CASE("family file round trip") {
  auto f = mfam(4, 3, {ms(4, {1, 1, 2}), ms(4, {2, 3, 4}), ms(4, {1, 4, 4})});
  auto text = format_family(f);
  CHECK(text.rfind("m=4 k=3 kind=multiset\n", 0) == 0);
  CHECK(parse_family(text) == f);

  auto sets = set_universe(5, 2);
  CHECK(parse_family(format_family(sets)) == sets);

  CHECK(parse_family("# comment\nm=3 k=2 kind=multiset\n\n1 1\n# x\n2 3\n")
            .size() == 2);
}

TEST_CASE("family file errors carry line numbers") {
  auto line_of = [](std::string_view text) {
    try {
      parse_family(text);
    } catch (const parse_error& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("m=3 k=2 kind=multiset\n1 1\n1 1\n") == 3);
  CHECK(line_of("m=3 k=2 kind=multiset\n2 1\n") == 2);
  CHECK(line_of("m=3 k=2 kind=set\n1 1\n") == 2);
  CHECK(line_of("m=3 k=2 kind=multiset\n1 4\n") == 2);
  CHECK(line_of("m=3 k=2 kind=multiset\n1 2 3\n") == 2);
  CHECK(line_of("m=3 k=2\n") == 1);
  CHECK(line_of("m=3 k=2 kind=multiset\n1 x\n") == 2);
}
