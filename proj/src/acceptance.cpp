#include "msekr/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "msekr/bijection.hpp"
#include "msekr/compression.hpp"
#include "msekr/counting.hpp"
#include "msekr/enumerate.hpp"
#include "msekr/errors.hpp"
#include "msekr/families.hpp"
#include "msekr/search.hpp"
#include "msekr/verify.hpp"

namespace msekr {

SuiteProfile parse_profile(std::string_view text) {
  if (text == "quick") {
    return SuiteProfile::quick;
  }
  if (text == "full") {
    return SuiteProfile::full;
  }
  throw contract_error("unknown suite profile '" + std::string(text) +
                       "' (expected quick or full)");
}

std::vector<std::string> criterion_ids(SuiteProfile profile) {
  std::vector<std::string> ids;
  int last = profile == SuiteProfile::quick ? 6 : 10;
  for (int i = 1; i <= last; ++i) {
    ids.push_back("AC-" + std::to_string(i));
  }
  return ids;
}

Family random_t_intersecting_family(int m, int k, int t, std::size_t max_size,
                                    std::mt19937_64& rng) {
  std::vector<Multiset> pool = enumerate_k_multisets(m, k);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<Multiset> kept;
  for (Multiset& a : pool) {
    if (kept.size() >= max_size) {
      break;
    }
    bool ok = std::all_of(kept.begin(), kept.end(), [&](const Multiset& b) {
      return intersection_size(a, b) >= t;
    });
    if (ok) {
      kept.push_back(std::move(a));
    }
  }
  return Family(m, k, FamilyKind::multiset, std::move(kept));
}

namespace {

// Collects failed expectations; the first few end up in the detail line.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      failures_.push_back(what);
    }
  }
  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& what) {
    bool ok = got == want;
    std::ostringstream msg;
    if (!ok) {
      msg << what << ": got " << show(got) << ", want " << show(want);
    }
    expect(ok, msg.str());
  }
  void info(const std::string& text) { info_.push_back(text); }

  bool passed() const { return failures_.empty(); }
  std::string detail() const {
    std::ostringstream out;
    if (failures_.empty()) {
      out << checks_ << " checks";
      for (const auto& i : info_) {
        out << "; " << i;
      }
      return out.str();
    }
    out << failures_.size() << "/" << checks_ << " checks failed";
    for (std::size_t i = 0; i < failures_.size() && i < 3; ++i) {
      out << "; " << failures_[i];
    }
    return out.str();
  }

 private:
  template <typename X>
  static std::string show(const X& x) {
    if constexpr (std::is_same_v<X, Count>) {
      return to_string(x);
    } else {
      std::ostringstream s;
      s << x;
      return s.str();
    }
  }

  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> info_;
};

Count as_count(std::size_t n) { return static_cast<Count>(n); }

void ac1(Checker& c) {
  for (int m : {4, 5}) {
    DisjointnessGraph g(GraphKind::multiset, m, 3);
    SearchResult r = max_independent_set(g);
    c.expect(r.status == SearchStatus::proved_optimal, "M(" + std::to_string(m) + ",3) not proved");
    c.equal(as_count(static_cast<std::size_t>(r.optimum)), binomial(m + 1, 2),
            "alpha(M(" + std::to_string(m) + ",3))");
  }
  DisjointnessGraph g(GraphKind::multiset, 5, 3);
  Enumeration all = enumerate_maximum_independent_sets(g, 15, 1000);
  c.expect(all.complete, "enumeration of M(5,3) optima incomplete");
  Family s = canonical_form(star(5, 3, 1));
  std::size_t stars = 0;
  for (const Family& f : all.families) {
    stars += canonical_form(f) == s ? 1 : 0;
  }
  c.equal(stars, all.families.size(), "optima of M(5,3) isomorphic to a star");
  c.info(std::to_string(all.families.size()) + " optima on M(5,3), all stars");
}

void ac2(Checker& c) {
  SearchResult r = max_intersecting_empty_common(6, 3);
  c.expect(r.status == SearchStatus::proved_optimal, "search not proved");
  Count formula = checked_add(checked_sub(binomial(7, 2), binomial(4, 2)), 1);
  c.equal(formula, Count{16}, "C(7,2)-C(4,2)+1");
  c.equal(as_count(static_cast<std::size_t>(r.optimum)), formula, "search optimum");
  c.equal(formula, Count{3 * 6 - 2}, "3m-2");
  Family hm = hm_multiset(6, 3);
  c.equal(as_count(hm.size()), formula, "|hm_multiset(6,3)|");
  c.expect(is_t_intersecting(hm, 1), "hm_multiset(6,3) not intersecting");
  c.expect(common_intersection(hm).empty(), "hm_multiset(6,3) has a common element");
}

void ac3(Checker& c) {
  VerifyReport r = verify_theorem("T3.4", TheoremParams{7, 2, 1, 2});
  c.expect(r.hypothesis_met, "hypothesis");
  c.expect(r.analytic_bound == Count{13}, "analytic bound 13");
  c.expect(r.constructed_size == Count{13}, "hit_s size 13");
  c.expect(r.search_optimum == 13, "search optimum 13");
  c.expect(r.witness_isomorphic_to_construction == true,
           "witness isomorphic to the 2-set hitting family");
  c.info("nodes " + std::to_string(r.nodes_explored));
}

void ac4(Checker& c) {
  SearchResult r = max_union_two_intersecting(5, 2);
  c.expect(r.status == SearchStatus::proved_optimal, "search not proved");
  Count formula = checked_add(multichoose(5, 1), multichoose(4, 1));
  c.equal(formula, Count{9}, "mc(5,1)+mc(4,1)");
  c.equal(as_count(static_cast<std::size_t>(r.optimum)), formula, "search optimum");
  for (int m = 2; m <= 8; ++m) {
    for (int k = 1; k <= 5; ++k) {
      Count lhs = checked_add(multichoose(m, k - 1), multichoose(m - 1, k - 1));
      Count rhs = checked_sub(multichoose(m, k), multichoose(m - 2, k));
      c.equal(lhs, rhs, "identity at m=" + std::to_string(m) + " k=" + std::to_string(k));
    }
  }
}

void ac5(Checker& c) {
  AkThreshold at = ak_threshold_r(5, 4, 2);
  c.equal(at.r, 1, "threshold r");
  c.expect(!at.boundary, "threshold is not a boundary case");
  Family f1 = frankl_multiset(5, 4, 2, 1);
  c.equal(as_count(f1.size()), Count{17}, "|frankl_multiset(5,4,2,1)|");
  c.equal(frankl_multiset_size(5, 4, 2, 1), Count{17}, "closed form");
  SearchResult r = max_t_intersecting(5, 4, 2, IntersectionMode::true_intersection);
  c.expect(r.status == SearchStatus::proved_optimal, "search not proved");
  c.equal(r.optimum, 17, "t-intersecting optimum over 70 vertices");
  Multiset kernel = Multiset::from_elements(5, {1, 1, 2, 3});
  std::vector<Multiset> members;
  for (Multiset& a : enumerate_k_multisets(5, 4)) {
    if (intersection_size(a, kernel) >= 3) {
      members.push_back(std::move(a));
    }
  }
  Family kf(5, 4, FamilyKind::multiset, std::move(members));
  c.equal(as_count(kf.size()), Count{13}, "kernel family size");
  c.expect(is_t_intersecting(kf, 2), "kernel family is 2-intersecting");
  c.info("nodes " + std::to_string(r.nodes_explored));
}

void ac6(Checker& c) {
  for (int m = 1; m <= 5; ++m) {
    for (int k = 1; k <= 4; ++k) {
      SupportBijection f(m, k);
      std::vector<KSet> sets = enumerate_k_subsets(f.n(), k);
      std::vector<Multiset> image;
      image.reserve(sets.size());
      bool support_ok = true;
      bool inverse_ok = true;
      for (const KSet& b : sets) {
        Multiset a = f.forward(b);
        std::vector<int> low;
        for (int e : b.members()) {
          if (e <= m) {
            low.push_back(e);
          }
        }
        support_ok = support_ok && std::ranges::equal(support(a).members(), low);
        inverse_ok = inverse_ok && f.inverse(a) == b;
        image.push_back(std::move(a));
      }
      std::string at = " at m=" + std::to_string(m) + " k=" + std::to_string(k);
      std::vector<Multiset> sorted = image;
      std::sort(sorted.begin(), sorted.end());
      c.expect(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
               "injective" + at);
      c.equal(as_count(sorted.size()), multichoose(m, k), "onto" + at);
      c.expect(support_ok, "support equality" + at);
      c.expect(inverse_ok, "inverse" + at);
      for (int t = 1; t <= k; ++t) {
        bool kneser_hom = true;
        bool kneser_t_hom = true;
        for (std::size_t i = 0; i < sets.size(); ++i) {
          for (std::size_t j = i + 1; j < sets.size(); ++j) {
            int common = intersection_size(sets[i].to_multiset(), sets[j].to_multiset());
            if (t == 1 && common == 0 && intersection_size(image[i], image[j]) != 0) {
              kneser_hom = false;
            }
            if (common < t && support_overlap(image[i], image[j]) >= t) {
              kneser_t_hom = false;
            }
          }
        }
        std::string at_t = at + " t=" + std::to_string(t);
        c.expect(kneser_hom, "disjoint sets map to disjoint multisets" + at_t);
        c.expect(kneser_t_hom, "|B1 n B2| < t implies support overlap < t" + at_t);
      }
    }
  }
}

void ac7(Checker& c) {
  std::mt19937_64 rng(20240611);
  std::size_t families = 0;
  for (int m = 1; m <= 6; ++m) {
    for (int k = 1; k <= 5; ++k) {
      for (int t = 1; t <= std::min(3, k); ++t) {
        if (m < 2 * k - t) {
          continue;
        }
        std::string at = " at m=" + std::to_string(m) + " k=" + std::to_string(k) +
                         " t=" + std::to_string(t);
        std::uniform_int_distribution<std::size_t> size(1, 60);
        for (int trial = 0; trial < 200; ++trial) {
          Family f = random_t_intersecting_family(m, k, t, size(rng), rng);
          Family g = down_compress_full(f, t);
          ++families;
          if (g.size() != f.size() || !is_t_intersecting(g, t) ||
              !is_support_t_intersecting(g, t)) {
            c.expect(false, "compressed family invalid" + at);
          }
        }
        if (t + 2 <= m && t + 1 <= k) {
          Family f1 = frankl_multiset(m, k, t, 1);
          c.expect(is_isomorphic(down_compress_full(f1, t), f1),
                   "Frankl r=1 not preserved" + at);
        }
      }
    }
  }
  Family fixed = fixed_multiset(5, 4, Multiset::from_elements(5, {1, 1}));
  // m = 5 is below 2k - t = 6 here; the per-pass checks still run.
  Family g = down_compress_full(fixed, 2, {}, true);
  c.equal(as_count(g.size()), Count{15}, "compressed fixed_multiset size");
  c.expect(support(common_intersection(g)).members().size() >= 2,
           "compressed fixed_multiset contains a fixed 2-set");
  c.info(std::to_string(families) + " random families compressed");
}

void ac8(Checker& c) {
  DisjointnessGraph k52(GraphKind::kneser, 5, 2);
  c.equal(max_independent_set(k52).optimum, 4, "alpha(K(5,2))");
  DisjointnessGraph k632(GraphKind::kneser_t, 6, 3, 2);
  SearchResult r = max_independent_set(k632);
  c.expect(r.status == SearchStatus::proved_optimal, "search not proved");
  Count best = 0;
  for (int r2 = 0; r2 <= 1; ++r2) {
    best = std::max(best, as_count(frankl_set(6, 3, 2, r2).size()));
  }
  c.equal(as_count(static_cast<std::size_t>(r.optimum)), best,
          "2-intersecting optimum over C(6,3)");
  c.equal(ak_size(6, 3, 2), best, "ak_size(6,3,2)");
}

void ac9(Checker& c) {
  int cases = 0;
  for (int m = 1; m <= 7; ++m) {
    for (int k = 1; k <= 5; ++k) {
      for (int t = 1; t <= std::min(3, k); ++t) {
        for (int r = 0; r <= 2; ++r) {
          if (t + r > k || t + 2 * r > m) {
            continue;
          }
          std::string at = " at m=" + std::to_string(m) + " k=" + std::to_string(k) +
                           " t=" + std::to_string(t) + " r=" + std::to_string(r);
          Count multi = frankl_multiset_size(m, k, t, r);
          c.equal(frankl_set_size(m + k - 1, k, t, r), multi, "Frankl sizes" + at);
          c.equal(as_count(frankl_multiset(m, k, t, r).size()), multi,
                  "Frankl multiset construction" + at);
          c.equal(as_count(frankl_set(m + k - 1, k, t, r).size()), multi,
                  "Frankl set construction" + at);
          ++cases;
        }
      }
    }
  }
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; k <= std::min(5, n); ++k) {
      for (int s = 1; s <= std::min(3, n); ++s) {
        c.equal(hajnal_rothschild_size(n, k, 1, s),
                checked_sub(binomial(n, k), binomial(n - s, k)),
                "inclusion-exclusion at n=" + std::to_string(n) +
                    " k=" + std::to_string(k) + " s=" + std::to_string(s));
      }
    }
  }
  c.info(std::to_string(cases) + " Frankl grid points");
}

void ac10(Checker& c) {
  for (int k = 1; k <= 5; ++k) {
    for (int t = 1; t <= k; ++t) {
      std::string at = " at k=" + std::to_string(k) + " t=" + std::to_string(t);
      SearchResult r = max_t_intersecting(2, k, t, IntersectionMode::true_intersection);
      c.expect(r.status == SearchStatus::proved_optimal, "search not proved" + at);
      c.expect(!r.witness.empty() && common_intersection(r.witness).cardinality() >= t,
               "optimum has a common t-multiset" + at);
      DisjointnessGraph g(GraphKind::multiset_t, 2, k, t);
      Enumeration all = enumerate_maximum_independent_sets(g, r.optimum, 1000);
      bool every = all.complete;
      for (const Family& f : all.families) {
        every = every && common_intersection(f).cardinality() >= t;
      }
      c.expect(every, "every optimum has a common t-multiset" + at);
    }
  }
  Count bound = ak_size(4 + 4 - 1, 4, 2);
  SearchResult s = max_t_intersecting(4, 4, 2, IntersectionMode::support_intersection);
  c.expect(s.status == SearchStatus::proved_optimal, "support search not proved");
  c.expect(as_count(static_cast<std::size_t>(s.optimum)) <= bound,
           "support optimum exceeds the set-side bound");
  c.info("support mode (4,4,2): bound " + to_string(bound) + ", optimum " +
         std::to_string(s.optimum) +
         (as_count(static_cast<std::size_t>(s.optimum)) == bound ? " (attained)"
                                                                 : " (not attained)"));
}

const std::vector<std::pair<std::string_view, std::function<void(Checker&)>>>&
table() {
  static const std::vector<std::pair<std::string_view, std::function<void(Checker&)>>>
      t = {{"AC-1", ac1}, {"AC-2", ac2}, {"AC-3", ac3}, {"AC-4", ac4},
           {"AC-5", ac5}, {"AC-6", ac6}, {"AC-7", ac7}, {"AC-8", ac8},
           {"AC-9", ac9}, {"AC-10", ac10}};
  return t;
}

}  // namespace

CriterionResult run_criterion(std::string_view id) {
  const auto& all = table();
  auto it = std::find_if(all.begin(), all.end(),
                         [&](const auto& e) { return e.first == id; });
  if (it == all.end()) {
    throw contract_error("unknown criterion '" + std::string(id) + "'");
  }
  CriterionResult out;
  out.id = std::string(id);
  auto start = std::chrono::steady_clock::now();
  try {
    Checker c;
    it->second(c);
    out.passed = c.passed();
    out.detail = c.detail();
  } catch (const std::exception& e) {
    out.passed = false;
    out.detail = std::string("exception: ") + e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out << std::left << std::setw(6) << r.id << ' ' << (r.passed ? "PASS" : "FAIL")
      << ' ' << std::right << std::fixed << std::setprecision(2) << std::setw(8)
      << r.seconds << "s  " << r.detail;
  return out.str();
}

std::vector<CriterionResult> run_suite(SuiteProfile profile, std::ostream& out) {
  std::vector<CriterionResult> results;
  for (const std::string& id : criterion_ids(profile)) {
    results.push_back(run_criterion(id));
    out << format_result(results.back()) << '\n' << std::flush;
  }
  return results;
}

}  // namespace msekr
