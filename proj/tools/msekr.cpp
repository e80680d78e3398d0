// msekr: command-line front end.
//
// Exit codes: 0 ok, 1 verification mismatch or not isomorphic, 2 usage,
// contract or parse error, 3 scale or node limit exceeded, 4 internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "msekr/acceptance.hpp"
#include "msekr/bijection.hpp"
#include "msekr/compression.hpp"
#include "msekr/errors.hpp"
#include "msekr/families.hpp"
#include "msekr/family_io.hpp"
#include "msekr/search.hpp"
#include "msekr/verify.hpp"

namespace {

using namespace msekr;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kScale = 3;
constexpr int kInternal = 4;

std::vector<int> parse_elements(const std::string& text) {
  std::vector<int> out;
  std::string token;
  for (char ch : text) {
    if (ch == ',' || ch == ' ') {
      if (!token.empty()) {
        out.push_back(std::stoi(token));
        token.clear();
      }
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      token += ch;
    } else {
      throw contract_error("bad element list '" + text + "'");
    }
  }
  if (!token.empty()) {
    out.push_back(std::stoi(token));
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += (i ? " " : "") + std::to_string(v[i]);
  }
  return out;
}

void row(std::ostream& out, std::string_view key, const std::string& value) {
  out << std::left << std::setw(20) << key << value << '\n';
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    throw contract_error("cannot write '" + path + "'");
  }
  out << text;
}

struct FamilyArgs {
  FamilySpec spec;
  std::string anchor;
};

void add_family_options(CLI::App* cmd, FamilyArgs& a) {
  cmd->add_option("--family", a.spec.name, "family name")->required();
  cmd->add_option("--m,--n", a.spec.m, "ground size")->required();
  cmd->add_option("--k", a.spec.k, "member cardinality")->required();
  cmd->add_option("--t", a.spec.t, "intersection threshold");
  cmd->add_option("--r", a.spec.r, "Frankl index");
  cmd->add_option("--s", a.spec.s, "number of blocks");
  cmd->add_option("--x", a.spec.x, "star element");
  cmd->add_option("--anchor", a.anchor, "fixed multiset or hitting set, e.g. 1,1,2");
}

FamilySpec resolve(FamilyArgs& a) {
  FamilySpec spec = a.spec;
  if (!a.anchor.empty()) {
    spec.anchor = parse_elements(a.anchor);
  }
  return spec;
}

int cmd_size(FamilyArgs& a) {
  FamilySpec spec = resolve(a);
  Family f = build_family(spec);
  std::optional<Count> closed = closed_form_size(spec);
  row(std::cout, "family", spec.name);
  row(std::cout, "closed_form", closed ? to_string(*closed) : "-");
  row(std::cout, "constructed", std::to_string(f.size()));
  if (closed && *closed != static_cast<Count>(f.size())) {
    std::cerr << "closed form and construction disagree\n";
    return kMismatch;
  }
  return kOk;
}

int cmd_construct(FamilyArgs& a, const std::string& out) {
  Family f = build_family(resolve(a));
  if (out.empty()) {
    write_family(std::cout, f);
  } else {
    write_family_file(out, f);
  }
  return kOk;
}

struct MapArgs {
  int m = 0;
  int k = 0;
  std::string set;
  std::string multiset;
  std::string family;
  std::string direction;
  std::string out;
};

int cmd_map(const MapArgs& a) {
  if (!a.family.empty()) {
    Family f = read_family_file(a.family);
    std::string_view inferred = f.kind() == FamilyKind::set ? "forward" : "inverse";
    if (!a.direction.empty() && a.direction != inferred) {
      throw contract_error("--direction " + a.direction + " does not match a " +
                           std::string(to_string(f.kind())) + " family");
    }
    Family g;
    if (f.kind() == FamilyKind::set) {
      SupportBijection b(f.ground_size() - f.k() + 1, f.k());
      g = b.forward(f);
    } else {
      SupportBijection b(f.ground_size(), f.k());
      g = b.inverse(f);
    }
    if (a.out.empty()) {
      write_family(std::cout, g);
    } else {
      write_family_file(a.out, g);
    }
    return kOk;
  }
  if (a.m < 1 || a.k < 1) {
    throw contract_error("--m and --k are required with --set or --multiset");
  }
  SupportBijection b(a.m, a.k);
  if (!a.set.empty()) {
    std::cout << join(b.forward(KSet(b.n(), parse_elements(a.set))).elements()) << '\n';
  } else if (!a.multiset.empty()) {
    KSet s = b.inverse(Multiset::from_elements(a.m, parse_elements(a.multiset)));
    std::cout << join(std::vector<int>(s.members().begin(), s.members().end())) << '\n';
  } else {
    throw contract_error("map needs one of --set, --multiset or --family");
  }
  return kOk;
}

int cmd_compress(const std::string& in, int t, const std::string& trace_path,
                 const std::string& out) {
  Family f = read_family_file(in);
  std::ofstream trace_file;
  ShiftTrace trace;
  if (!trace_path.empty()) {
    trace_file.open(trace_path);
    if (!trace_file) {
      throw contract_error("cannot write '" + trace_path + "'");
    }
    trace = [&](const ShiftEvent& e) {
      nlohmann::json j;
      j["pass"] = e.pass;
      j["i"] = e.params.i;
      j["s"] = e.params.s;
      j["j"] = e.params.j;
      j["before"] = e.before.elements();
      j["after"] = e.after.elements();
      trace_file << j.dump() << '\n';
    };
  }
  Family g = down_compress_full(f, t, trace);
  if (out.empty()) {
    write_family(std::cout, g);
  } else {
    write_family_file(out, g);
  }
  return kOk;
}

struct SearchArgs {
  std::string kind;
  int m = 0;
  int k = 0;
  int t = 1;
  int s = 1;
  std::string constraint = "none";
  std::uint64_t node_limit = SearchOptions{}.node_limit;
  std::string json;
  std::string witness;
};

int cmd_search(const SearchArgs& a) {
  SearchOptions opt;
  opt.node_limit = a.node_limit;
  DisjointnessGraph g(parse_graph_kind(a.kind), a.m, a.k, a.t, opt.vertex_cap);
  SearchResult r;
  if (a.constraint == "none") {
    r = max_independent_set(g, opt);
  } else if (a.constraint == "empty-common") {
    r = max_independent_set_small_core(g, 1, opt);
  } else if (a.constraint == "nontrivial-t") {
    r = max_independent_set_small_core(g, g.t(), opt);
  } else if (a.constraint == "bipartite") {
    r = max_induced_bipartite(g, opt);
  } else if (a.constraint == "clique-free") {
    r = max_clique_free_subset(g, a.s, opt);
  } else {
    throw contract_error("unknown constraint '" + a.constraint + "'");
  }
  row(std::cout, "graph", g.name());
  row(std::cout, "vertices", std::to_string(g.vertex_count()));
  row(std::cout, "edges", std::to_string(g.edge_count()));
  row(std::cout, "constraint",
      a.constraint == "clique-free" ? a.constraint + " s=" + std::to_string(a.s)
                                    : a.constraint);
  row(std::cout, "optimum", std::to_string(r.optimum));
  row(std::cout, "status", std::string(to_string(r.status)));
  row(std::cout, "nodes_explored", std::to_string(r.nodes_explored));
  for (const Multiset& member : r.witness) {
    row(std::cout, "witness", join(member.elements()));
  }
  if (!a.json.empty()) {
    nlohmann::json j;
    j["graph"] = g.name();
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["constraint"] = a.constraint;
    j["s"] = a.s;
    j["optimum"] = r.optimum;
    j["status"] = std::string(to_string(r.status));
    j["nodes_explored"] = r.nodes_explored;
    nlohmann::json members = nlohmann::json::array();
    for (const Multiset& member : r.witness) {
      members.push_back(member.elements());
    }
    j["witness"] = members;
    write_text(a.json, j.dump(2) + "\n");
  }
  if (!a.witness.empty()) {
    write_family_file(a.witness, r.witness);
  }
  return r.status == SearchStatus::node_limit_hit ? kScale : kOk;
}

struct VerifyArgs {
  std::string theorem;
  TheoremParams params;
  bool uniqueness = false;
  std::uint64_t node_limit = SearchOptions{}.node_limit;
  std::string json;
};

int cmd_verify(const VerifyArgs& a) {
  VerifyOptions opt;
  opt.uniqueness = a.uniqueness;
  opt.search.node_limit = a.node_limit;
  VerifyReport r = verify_theorem(a.theorem, a.params, opt);
  std::cout << report_table(r);
  if (!a.json.empty()) {
    write_text(a.json, report_json(r) + "\n");
  }
  int code = report_exit_code(r);
  if (code == kMismatch) {
    std::cerr << "verification mismatch\n";
  } else if (code == kScale) {
    std::cerr << "node limit hit\n";
  }
  return code;
}

int cmd_isomorphic(const std::string& a, const std::string& b) {
  bool iso = is_isomorphic(read_family_file(a), read_family_file(b));
  std::cout << (iso ? "isomorphic" : "not isomorphic") << '\n';
  return iso ? kOk : kMismatch;
}

int cmd_suite(const std::string& profile) {
  auto results = run_suite(parse_profile(profile), std::cout);
  std::size_t passed = std::count_if(results.begin(), results.end(),
                                     [](const CriterionResult& r) { return r.passed; });
  std::cout << passed << "/" << results.size() << " criteria passed\n";
  return passed == results.size() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intersecting families of multisets: constructions, compression and exact search"};
  app.require_subcommand(1);

  FamilyArgs size_args;
  auto* size_cmd = app.add_subcommand("size", "closed-form and constructed family size");
  add_family_options(size_cmd, size_args);

  FamilyArgs construct_args;
  std::string construct_out;
  auto* construct_cmd = app.add_subcommand("construct", "write a family file");
  add_family_options(construct_cmd, construct_args);
  construct_cmd->add_option("-o,--out", construct_out, "output path (default stdout)");

  MapArgs map_args;
  auto* map_cmd = app.add_subcommand("map", "support-preserving set/multiset bijection");
  map_cmd->add_option("--m", map_args.m, "multiset ground size");
  map_cmd->add_option("--k", map_args.k, "cardinality");
  auto* map_set = map_cmd->add_option("--set", map_args.set, "k-subset of [m+k-1] to map forward");
  auto* map_multi =
      map_cmd->add_option("--multiset", map_args.multiset, "k-multiset of [m] to map back");
  auto* map_family =
      map_cmd->add_option("--family", map_args.family, "family file (direction from its kind)");
  map_set->excludes(map_multi)->excludes(map_family);
  map_multi->excludes(map_family);
  map_cmd->add_option("--direction", map_args.direction, "forward (sets) or inverse (multisets)")
      ->check(CLI::IsMember({"forward", "inverse"}));
  map_cmd->add_option("-o,--out", map_args.out, "output path for --family");

  std::string compress_in;
  int compress_t = 1;
  std::string compress_trace;
  std::string compress_out;
  auto* compress_cmd = app.add_subcommand("compress", "down-compress a t-intersecting family");
  compress_cmd->add_option("family,-i,--in", compress_in, "family file")->required();
  compress_cmd->add_option("-t,--t", compress_t, "intersection threshold")->required();
  compress_cmd->add_option("--trace", compress_trace, "JSON-lines trace of every shift");
  compress_cmd->add_option("-o,--out", compress_out, "output path (default stdout)");

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "exact search on a disjointness graph");
  search_cmd->add_option("--kind", search_args.kind, "K, Kt, M, Mt or Mp")->required();
  search_cmd->add_option("--m,--n", search_args.m, "ground size")->required();
  search_cmd->add_option("--k", search_args.k, "cardinality")->required();
  search_cmd->add_option("--t", search_args.t, "intersection threshold");
  search_cmd->add_option("--s", search_args.s, "clique size bound for clique-free");
  search_cmd
      ->add_option("--constraint", search_args.constraint,
                   "none, empty-common, nontrivial-t, bipartite or clique-free")
      ->check(CLI::IsMember({"none", "empty-common", "nontrivial-t", "bipartite",
                             "clique-free"}));
  search_cmd->add_option("--node-limit", search_args.node_limit, "branch-and-bound node limit");
  search_cmd->add_option("--json", search_args.json, "write a JSON result");
  search_cmd->add_option("--witness", search_args.witness, "write the witness family file");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "bound vs construction vs exact search");
  verify_cmd->add_option("--theorem", verify_args.theorem, "T1.1 T1.4 T2.1 T2.3 T2.4 T3.3 T3.4 T3.5 T4.1 T4.8")
      ->required();
  verify_cmd->add_option("--m,--n", verify_args.params.m, "ground size")->required();
  verify_cmd->add_option("--k", verify_args.params.k, "cardinality")->required();
  verify_cmd->add_option("--t", verify_args.params.t, "intersection threshold");
  verify_cmd->add_option("--s", verify_args.params.s, "number of pairwise disjoint members allowed");
  verify_cmd->add_flag("--uniqueness", verify_args.uniqueness,
                       "enumerate all optima and count isomorphism classes");
  verify_cmd->add_option("--node-limit", verify_args.node_limit, "branch-and-bound node limit");
  verify_cmd->add_option("--json", verify_args.json, "write the JSON report");

  std::string iso_a;
  std::string iso_b;
  auto* iso_cmd = app.add_subcommand("isomorphic", "test two family files for isomorphism");
  iso_cmd->add_option("a", iso_a, "first family file")->required();
  iso_cmd->add_option("b", iso_b, "second family file")->required();

  std::string profile = "quick";
  auto* suite_cmd = app.add_subcommand("suite", "run the acceptance criteria");
  suite_cmd->add_option("--profile", profile, "quick or full");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*size_cmd) {
      return cmd_size(size_args);
    }
    if (*construct_cmd) {
      return cmd_construct(construct_args, construct_out);
    }
    if (*map_cmd) {
      return cmd_map(map_args);
    }
    if (*compress_cmd) {
      return cmd_compress(compress_in, compress_t, compress_trace, compress_out);
    }
    if (*search_cmd) {
      return cmd_search(search_args);
    }
    if (*verify_cmd) {
      return cmd_verify(verify_args);
    }
    if (*iso_cmd) {
      return cmd_isomorphic(iso_a, iso_b);
    }
    if (*suite_cmd) {
      return cmd_suite(profile);
    }
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const scale_exceeded& e) {
    std::cerr << "scale exceeded: " << e.what() << '\n';
    return kScale;
  } catch (const std::overflow_error& e) {
    std::cerr << "overflow: " << e.what() << '\n';
    return kScale;
  } catch (const internal_invariant_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
