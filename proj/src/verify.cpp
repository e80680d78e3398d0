#include "msekr/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "msekr/enumerate.hpp"
#include "msekr/errors.hpp"
#include "msekr/families.hpp"

namespace msekr {

std::string_view to_string(UniquenessVerdict verdict) {
  switch (verdict) {
    case UniquenessVerdict::unique_up_to_iso:
      return "unique_up_to_iso";
    case UniquenessVerdict::multiple_classes:
      return "multiple_classes";
    case UniquenessVerdict::not_checked:
      return "not_checked";
  }
  return "?";
}

std::vector<std::string_view> theorem_ids() {
  return {"T1.1", "T1.4", "T2.1", "T2.3", "T2.4",
          "T3.3", "T3.4", "T3.5", "T4.1", "T4.8"};
}

namespace {

enum class Oracle { independent, small_core, clique_free, bipartite };

struct Plan {
  bool set_theorem = false;
  bool hypothesis = true;
  std::optional<Count> bound;
  std::optional<Family> construction;
  GraphKind kind = GraphKind::multiset;
  int graph_t = 1;
  Oracle oracle = Oracle::independent;
  int s = 1;
  int core_below = 1;
  std::vector<std::string> notes;
};

// Exact tests of n > (3 + sqrt 5) k / 2 and m > (1 + sqrt 5) k / 2 + 1.
bool exceeds_golden_bipartite_sets(std::int64_t n, std::int64_t k) {
  std::int64_t x = 2 * n - 3 * k;
  return x > 0 && x * x > 5 * k * k;
}
bool exceeds_golden_bipartite_multisets(std::int64_t m, std::int64_t k) {
  std::int64_t x = 2 * (m - 1) - k;
  return x > 0 && x * x > 5 * k * k;
}

// Runs `make` and stores the family, or records why it is undefined here.
void construct(Plan& plan, const std::function<Family()>& make) {
  try {
    plan.construction = make();
  } catch (const contract_error& e) {
    plan.notes.push_back(std::string("construction undefined: ") + e.what());
  }
}

void bound(Plan& plan, const std::function<Count()>& value) {
  try {
    plan.bound = value();
  } catch (const contract_error& e) {
    plan.notes.push_back(std::string("bound undefined: ") + e.what());
  }
}

void require_positive(const TheoremParams& p) {
  if (p.m < 1 || p.k < 1 || p.t < 1 || p.s < 1) {
    throw contract_error("theorem parameters must be positive");
  }
}

Plan plan_for(std::string_view id, const TheoremParams& p) {
  require_positive(p);
  Plan plan;
  int m = p.m;
  int k = p.k;
  int t = p.t;
  int s = p.s;

  if (id == "T1.1") {
    plan.set_theorem = true;
    plan.hypothesis = m >= 2 * k;
    plan.bound = binomial(m - 1, k - 1);
    construct(plan, [&] { return star_set(m, k, 1); });
    plan.kind = GraphKind::kneser;
    if (m == 2 * k) {
      plan.notes.push_back("n = 2k: stars are not the only maximum families");
    }
  } else if (id == "T1.4") {
    plan.hypothesis = m >= k + 1;
    plan.bound = binomial(m + k - 2, k - 1);
    construct(plan, [&] { return star(m, k, 1); });
    plan.kind = GraphKind::multiset;
    if (m == k + 1) {
      plan.notes.push_back("m = k + 1: maximum families need not be stars");
    }
  } else if (id == "T2.1") {
    plan.set_theorem = true;
    plan.hypothesis = t <= k && k <= m;
    bound(plan, [&] { return ak_size(m, k, t); });
    construct(plan, [&] {
      if (m <= 2 * k - t) {
        return set_universe(m, k);
      }
      Family best;
      for (int r = 0; r <= k - t && t + 2 * r <= m; ++r) {
        Family f = frankl_set(m, k, t, r);
        if (f.size() > best.size()) {
          best = std::move(f);
        }
      }
      return best;
    });
    if (m <= 2 * k - t) {
      plan.notes.push_back("n <= 2k - t: every pair of k-sets t-intersects");
    }
    plan.kind = GraphKind::kneser_t;
    plan.graph_t = t;
  } else if (id == "T2.3") {
    plan.set_theorem = true;
    plan.hypothesis = m >= (2 * s + 1) * k - s;
    plan.bound = checked_sub(binomial(m, k), binomial(m - s, k));
    construct(plan, [&] { return hajnal_rothschild_set(m, k, 1, s); });
    plan.kind = GraphKind::kneser;
    plan.oracle = Oracle::clique_free;
    plan.s = s;
  } else if (id == "T2.4") {
    plan.set_theorem = true;
    plan.hypothesis = exceeds_golden_bipartite_sets(m, k);
    plan.bound = checked_add(binomial(m - 1, k - 1), binomial(m - 2, k - 1));
    construct(plan, [&] { return hajnal_rothschild_set(m, k, 1, 2); });
    plan.kind = GraphKind::kneser;
    plan.oracle = Oracle::bipartite;
  } else if (id == "T3.3") {
    plan.hypothesis = 1 < k && k <= m - 1;
    plan.bound = checked_add(
        checked_sub(binomial(m + k - 2, k - 1), binomial(m - 2, k - 1)), 1);
    construct(plan, [&] { return hm_multiset(m, k); });
    plan.kind = GraphKind::multiset;
    plan.oracle = Oracle::small_core;
    plan.core_below = 1;
    if (plan.hypothesis && !(3 < k && k < m - 1)) {
      plan.notes.push_back("uniqueness is only claimed for 3 < k < m - 1");
    }
  } else if (id == "T3.4") {
    plan.hypothesis = m > (2 * k - 1) * s;
    plan.bound = checked_sub(multichoose(m, k), multichoose(m - s, k));
    construct(plan, [&] {
      std::vector<int> hit(static_cast<std::size_t>(std::min(s, m)));
      std::iota(hit.begin(), hit.end(), 1);
      return hit_s(m, k, KSet(m, hit));
    });
    plan.kind = GraphKind::multiset;
    plan.oracle = Oracle::clique_free;
    plan.s = s;
  } else if (id == "T3.5") {
    plan.hypothesis = exceeds_golden_bipartite_multisets(m, k);
    plan.bound = checked_add(multichoose(m, k - 1), multichoose(m - 1, k - 1));
    construct(plan, [&] { return hit_s(m, k, KSet(m, {1, 2})); });
    plan.kind = GraphKind::multiset;
    plan.oracle = Oracle::bipartite;
  } else if (id == "T4.1") {
    if (t > k) {
      throw contract_error("T4.1 needs t <= k");
    }
    plan.hypothesis = m >= 2 * k - t;
    plan.kind = GraphKind::multiset_t;
    plan.graph_t = t;
    if (!plan.hypothesis) {
      plan.notes.push_back("m < 2k - t: outside the proved range");
    }
    if (m + k - 1 > 2 * k - t) {
      AkThreshold at = ak_threshold_r(m, k, t);
      std::ostringstream note;
      note << "r = " << at.r;
      if (at.boundary) {
        note << " (boundary, tied with r = " << at.r_next << ")";
      }
      plan.notes.push_back(note.str());
      bound(plan, [&] { return frankl_multiset_size(m, k, t, at.r); });
      construct(plan, [&] { return frankl_multiset(m, k, t, at.r); });
      Count ak = ak_size(m + k - 1, k, t);
      if (plan.bound && ak != *plan.bound) {
        plan.notes.push_back("set-side maximum " + to_string(ak) +
                             " differs from the Frankl family size");
      }
    } else {
      plan.notes.push_back("n <= 2k - t: no Frankl index applies");
    }
  } else if (id == "T4.8") {
    if (!(1 < t && t < k)) {
      throw contract_error("T4.8 needs 1 < t < k");
    }
    plan.hypothesis = m >= 2 * k - t && m > t * (k - t) + 2;
    plan.kind = GraphKind::multiset_t;
    plan.graph_t = t;
    plan.oracle = Oracle::small_core;
    plan.core_below = t;
    plan.notes.push_back(
        "case split read as k <= 2t+1 (Frankl r = 1 only) versus k > 2t+1 "
        "(larger of Frankl r = 1 and the Hilton-Milner type family)");
    std::optional<Family> frankl;
    std::optional<Family> hm;
    try {
      frankl = frankl_multiset(m, k, t, 1);
    } catch (const contract_error& e) {
      plan.notes.push_back(std::string("Frankl r = 1 undefined: ") + e.what());
    }
    if (k > 2 * t + 1) {
      try {
        hm = hm_t_multiset(m, k, t);
      } catch (const contract_error& e) {
        plan.notes.push_back(std::string("Hilton-Milner type family undefined: ") +
                             e.what());
      }
    }
    if (hm && (!frankl || hm->size() > frankl->size())) {
      plan.construction = hm;
    } else if (frankl) {
      plan.construction = frankl;
    }
    if (plan.construction) {
      plan.bound = static_cast<Count>(plan.construction->size());
    }
  } else {
    throw contract_error("unknown theorem '" + std::string(id) + "'");
  }
  return plan;
}

std::string params_text(const VerifyReport& r) {
  std::ostringstream out;
  out << (r.set_theorem ? "n=" : "m=") << r.params.m << " k=" << r.params.k;
  out << " t=" << r.params.t << " s=" << r.params.s;
  return out.str();
}

void check_uniqueness(VerifyReport& report, const DisjointnessGraph& graph,
                      const Plan& plan, const VerifyOptions& options) {
  if (plan.oracle == Oracle::clique_free || plan.oracle == Oracle::bipartite) {
    report.notes.push_back("uniqueness enumeration only runs for independent-set searches");
    return;
  }
  if (report.status != SearchStatus::proved_optimal || !report.search_optimum ||
      *report.search_optimum == 0) {
    report.notes.push_back("uniqueness skipped: no proved optimum");
    return;
  }
  if (graph.ground_size() > kMaxCanonicalGround) {
    report.notes.push_back("uniqueness skipped: ground set too large for canonical forms");
    return;
  }
  std::optional<int> core;
  if (plan.oracle == Oracle::small_core) {
    core = plan.core_below;
  }
  Enumeration all = enumerate_maximum_independent_sets(
      graph, *report.search_optimum, options.enumeration_cap, core, options.search);
  report.nodes_explored += all.nodes_explored;
  if (!all.complete) {
    report.notes.push_back("uniqueness skipped: enumeration cut short after " +
                           std::to_string(all.families.size()) + " families");
    return;
  }
  std::vector<Family> classes;
  for (const Family& f : all.families) {
    Family c = canonical_form(f);
    if (std::find(classes.begin(), classes.end(), c) == classes.end()) {
      classes.push_back(std::move(c));
    }
  }
  report.optimal_classes = static_cast<int>(classes.size());
  report.uniqueness_verdict = classes.size() == 1
                                  ? UniquenessVerdict::unique_up_to_iso
                                  : UniquenessVerdict::multiple_classes;
  report.notes.push_back(std::to_string(all.families.size()) +
                         " maximum families enumerated");
}

}  // namespace

VerifyReport verify_theorem(std::string_view theorem, const TheoremParams& params,
                            const VerifyOptions& options) {
  auto start = std::chrono::steady_clock::now();
  Plan plan = plan_for(theorem, params);

  VerifyReport report;
  report.theorem = std::string(theorem);
  report.params = params;
  report.set_theorem = plan.set_theorem;
  report.hypothesis_met = plan.hypothesis;
  report.analytic_bound = plan.bound;
  if (plan.construction) {
    report.constructed_size = static_cast<Count>(plan.construction->size());
  }
  report.notes = plan.notes;

  DisjointnessGraph graph(plan.kind, params.m, params.k, plan.graph_t,
                          options.search.vertex_cap);
  SearchResult result;
  switch (plan.oracle) {
    case Oracle::independent:
      result = max_independent_set(graph, options.search);
      break;
    case Oracle::small_core:
      result = max_independent_set_small_core(graph, plan.core_below, options.search);
      break;
    case Oracle::clique_free:
      result = max_clique_free_subset(graph, plan.s, options.search);
      break;
    case Oracle::bipartite:
      result = max_induced_bipartite(graph, options.search);
      break;
  }
  report.status = result.status;
  report.nodes_explored = result.nodes_explored;
  if (result.status == SearchStatus::proved_optimal) {
    report.search_optimum = result.optimum;
  } else {
    report.notes.push_back("node limit hit; best found " +
                           std::to_string(result.optimum));
  }

  if (plan.construction && graph.ground_size() <= kMaxCanonicalGround &&
      result.status == SearchStatus::proved_optimal) {
    report.witness_isomorphic_to_construction =
        is_isomorphic(result.witness, *plan.construction);
  }
  if (options.uniqueness) {
    check_uniqueness(report, graph, plan, options);
  }

  std::vector<Count> values;
  if (report.analytic_bound) {
    values.push_back(*report.analytic_bound);
  }
  if (report.constructed_size) {
    values.push_back(*report.constructed_size);
  }
  if (report.search_optimum) {
    values.push_back(static_cast<Count>(*report.search_optimum));
  }
  report.match = std::all_of(values.begin(), values.end(),
                             [&](Count v) { return v == values.front(); });
  if (report.hypothesis_met && report.analytic_bound && report.constructed_size &&
      *report.constructed_size > *report.analytic_bound) {
    report.notes.push_back("construction exceeds the analytic bound");
    report.match = false;
  }

  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

namespace {

nlohmann::json count_json(const std::optional<Count>& c) {
  if (!c) {
    return nullptr;
  }
  if (*c <= static_cast<Count>(UINT64_MAX)) {
    return static_cast<std::uint64_t>(*c);
  }
  return to_string(*c);
}

std::string count_text(const std::optional<Count>& c) {
  return c ? to_string(*c) : "-";
}

}  // namespace

std::string report_json(const VerifyReport& r) {
  nlohmann::json j;
  j["theorem"] = r.theorem;
  nlohmann::json params;
  params[r.set_theorem ? "n" : "m"] = r.params.m;
  params["k"] = r.params.k;
  params["t"] = r.params.t;
  params["s"] = r.params.s;
  j["params"] = params;
  j["analytic_bound"] = count_json(r.analytic_bound);
  j["constructed_size"] = count_json(r.constructed_size);
  j["search_optimum"] =
      r.search_optimum ? nlohmann::json(*r.search_optimum) : nlohmann::json(nullptr);
  j["status"] = std::string(to_string(r.status));
  j["uniqueness_verdict"] = std::string(to_string(r.uniqueness_verdict));
  j["optimal_classes"] =
      r.optimal_classes ? nlohmann::json(*r.optimal_classes) : nlohmann::json(nullptr);
  j["hypothesis_met"] = r.hypothesis_met;
  j["hypothesis_not_met"] = !r.hypothesis_met;
  j["match"] = r.match;
  j["witness_isomorphic_to_construction"] =
      r.witness_isomorphic_to_construction
          ? nlohmann::json(*r.witness_isomorphic_to_construction)
          : nlohmann::json(nullptr);
  j["nodes_explored"] = r.nodes_explored;
  j["elapsed_ms"] = r.elapsed_ms;
  j["notes"] = r.notes;
  return j.dump(2);
}

std::string report_table(const VerifyReport& r) {
  std::ostringstream out;
  auto row = [&](std::string_view key, const std::string& value) {
    out << std::left << std::setw(20) << key << value << '\n';
  };
  row("theorem", r.theorem);
  row("params", params_text(r));
  row("hypothesis", r.hypothesis_met ? "met" : "not met");
  row("analytic_bound", count_text(r.analytic_bound));
  row("constructed_size", count_text(r.constructed_size));
  row("search_optimum", r.search_optimum ? std::to_string(*r.search_optimum) : "-");
  row("status", std::string(to_string(r.status)));
  std::string verdict(to_string(r.uniqueness_verdict));
  if (r.optimal_classes) {
    verdict += " (" + std::to_string(*r.optimal_classes) + " class" +
               (*r.optimal_classes == 1 ? "" : "es") + ")";
  }
  row("uniqueness", verdict);
  row("witness_iso", r.witness_isomorphic_to_construction
                         ? (*r.witness_isomorphic_to_construction ? "yes" : "no")
                         : "-");
  row("match", r.match ? "yes" : "no");
  row("nodes_explored", std::to_string(r.nodes_explored));
  for (const std::string& note : r.notes) {
    row("note", note);
  }
  return out.str();
}

int report_exit_code(const VerifyReport& report) {
  if (report.status == SearchStatus::node_limit_hit) {
    return 3;
  }
  return report.hypothesis_met && !report.match ? 1 : 0;
}

}  // namespace msekr
