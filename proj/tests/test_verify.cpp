#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "msekr/errors.hpp"
#include "msekr/verify.hpp"

using namespace msekr;

namespace {

VerifyReport run(std::string_view id, TheoremParams p, bool uniq = false) {
  VerifyOptions opt;
  opt.uniqueness = uniq;
  return verify_theorem(id, p, opt);
}

void check_all_equal(const VerifyReport& r, int value) {
  CAPTURE(r.theorem);
  CHECK(r.hypothesis_met);
  CHECK(r.match);
  REQUIRE(r.search_optimum.has_value());
  CHECK(*r.search_optimum == value);
  REQUIRE(r.analytic_bound.has_value());
  CHECK(*r.analytic_bound == static_cast<Count>(value));
  REQUIRE(r.constructed_size.has_value());
  CHECK(*r.constructed_size == static_cast<Count>(value));
  CHECK(report_exit_code(r) == 0);
}

}  // namespace

TEST_CASE("theorem list") {
  CHECK(theorem_ids().size() == 10);
  CHECK_THROWS_AS(run("T9.9", {5, 2}), contract_error);
}

TEST_CASE("set theorems") {
  auto a = run("T1.1", {5, 2}, true);
  check_all_equal(a, 4);
  CHECK(a.uniqueness_verdict == UniquenessVerdict::unique_up_to_iso);
  check_all_equal(run("T2.1", {8, 4, 2}), 17);
  check_all_equal(run("T2.3", {8, 2, 1, 2}), 13);
  check_all_equal(run("T2.4", {6, 2}), 9);
}

TEST_CASE("multiset theorems") {
  check_all_equal(run("T1.4", {5, 3}), 15);
  auto u = run("T1.4", {5, 3}, true);
  CHECK(u.uniqueness_verdict == UniquenessVerdict::unique_up_to_iso);
  // m = k + 1: more than one class of optimal families
  auto boundary = run("T1.4", {4, 3}, true);
  CHECK(*boundary.search_optimum == 10);
  CHECK(boundary.uniqueness_verdict == UniquenessVerdict::multiple_classes);

  auto hm = run("T3.3", {6, 4}, true);
  check_all_equal(hm, 53);
  CHECK(hm.uniqueness_verdict == UniquenessVerdict::unique_up_to_iso);
  check_all_equal(run("T3.3", {6, 3}), 16);

  auto p = run("T3.4", {7, 2, 1, 2});
  check_all_equal(p, 13);
  CHECK(p.witness_isomorphic_to_construction == true);
  check_all_equal(run("T3.5", {5, 2}), 9);
  check_all_equal(run("T4.1", {8, 4, 2}), 36);
  check_all_equal(run("T4.8", {5, 3, 2}), 4);
}

TEST_CASE("outside the hypothesis") {
  auto r = run("T4.1", {4, 4, 2});
  CHECK_FALSE(r.hypothesis_met);
  CHECK(r.search_optimum == 13);
  CHECK_FALSE(r.notes.empty());
  CHECK(report_exit_code(r) == 0);

  // m < 2k - t, yet the Frankl family is still optimal
  auto below = run("T4.1", {5, 4, 2});
  CHECK_FALSE(below.hypothesis_met);
  CHECK(below.search_optimum == 17);
  CHECK(below.match);

  auto t = run("T1.4", {2, 3});
  CHECK_FALSE(t.hypothesis_met);
}

TEST_CASE("node limit maps to exit code 3") {
  VerifyOptions opt;
  opt.search.node_limit = 3;
  auto r = verify_theorem("T3.3", {7, 4}, opt);
  CHECK(r.status == SearchStatus::node_limit_hit);
  CHECK(report_exit_code(r) == 3);
}

TEST_CASE("report formats") {
  auto r = run("T3.4", {7, 2, 1, 2});
  auto j = nlohmann::json::parse(report_json(r));
  CHECK(j.contains("theorem"));
  CHECK(j.contains("match"));
  CHECK(j.contains("search_optimum"));
  CHECK(report_table(r).find("T3.4") != std::string::npos);
}
