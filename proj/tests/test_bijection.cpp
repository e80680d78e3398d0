#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "msekr/bijection.hpp"
#include "msekr/enumerate.hpp"
#include "msekr/errors.hpp"
#include "oracle.hpp"

using namespace msekr;

TEST_CASE("small examples, m=3 k=2") {
  SupportBijection f(3, 2);
  CHECK(f.n() == 4);
  CHECK(f.forward(KSet(4, {1, 2})) == Multiset::from_elements(3, {1, 2}));
  CHECK(f.forward(KSet(4, {1, 4})) == Multiset::from_elements(3, {1, 1}));
  CHECK(f.inverse(Multiset::from_elements(3, {2, 2})) == KSet(4, {2, 4}));
}

TEST_CASE("sets inside [m] map to themselves") {
  for (int m = 2; m <= 6; ++m)
    for (int k = 1; k <= m; ++k) {
      SupportBijection f(m, k);
      for (const auto& b : enumerate_k_subsets(m, k)) {
        KSet wide(f.n(), std::vector<int>(b.members().begin(), b.members().end()));
        CHECK(f.forward(wide) == b.to_multiset());
        CHECK(f.inverse(b.to_multiset()) == wide);
      }
    }
}

TEST_CASE("class_size") {
  SupportBijection f(5, 4);
  CHECK(f.class_size(4) == 1);
  CHECK(f.class_size(1) == 1);
  CHECK(f.class_size(2) == 3);
  CHECK_THROWS_AS(f.class_size(0), contract_error);
  CHECK_THROWS_AS(f.class_size(5), contract_error);
}

TEST_CASE("wrong arity is rejected") {
  SupportBijection f(3, 2);
  CHECK_THROWS_AS(f.forward(KSet(4, {1, 2, 3})), contract_error);
  CHECK_THROWS_AS(f.inverse(Multiset::from_elements(3, {1, 2, 3})),
                  contract_error);
  CHECK_THROWS_AS(SupportBijection(0, 2), contract_error);
}

TEST_CASE("bijection, support and class counts, exhaustive") {
  for (int m = 1; m <= 6; ++m)
    for (int k = 1; k <= 6; ++k) {
      SupportBijection f(m, k);
      auto sets = enumerate_k_subsets(f.n(), k);
      REQUIRE(sets.size() == oracle::choose(m + k - 1, k));
      std::set<Multiset> image;
      std::map<std::vector<int>, int> per_class;
      for (const auto& b : sets) {
        auto a = f.forward(b);
        CHECK(a.cardinality() == k);
        std::vector<int> low;
        for (int x : b.members())
          if (x <= m) low.push_back(x);
        auto sa = support(a);
        CHECK(std::vector<int>(sa.members().begin(), sa.members().end()) == low);
        CHECK(f.inverse(a) == b);
        image.insert(a);
        ++per_class[low];
      }
      CHECK(image.size() == sets.size());
      for (const auto& a : enumerate_k_multisets(m, k))
        CHECK(f.forward(f.inverse(a)) == a);
      if (m <= 5 && k <= 5)
        for (const auto& [low, count] : per_class)
          CHECK(f.class_size(static_cast<int>(low.size())) ==
                static_cast<Count>(count));
    }
}

TEST_CASE("homomorphism properties") {
  for (int m = 1; m <= 5; ++m)
    for (int k = 1; k <= 5; ++k) {
      SupportBijection f(m, k);
      auto sets = enumerate_k_subsets(f.n(), k);
      std::vector<Multiset> img;
      for (const auto& b : sets) img.push_back(f.forward(b));
      for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
          int common = set_intersection(sets[i], sets[j]).size();
          if (common == 0) CHECK(intersect(img[i], img[j]).empty());
          for (int t = 1; t <= k; ++t)
            if (common < t) CHECK(support_overlap(img[i], img[j]) < t);
        }
    }
}

TEST_CASE("family images") {
  SupportBijection f(4, 3);
  auto sets = set_universe(6, 3);
  auto image = f.forward(sets);
  CHECK(image == multiset_universe(4, 3));
  CHECK(f.inverse(image) == sets);
}
