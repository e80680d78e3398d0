#ifndef MSEKR_VERIFY_HPP
#define MSEKR_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "msekr/counting.hpp"
#include "msekr/search.hpp"

namespace msekr {

/// Theorem parameters. `m` is the ground size: n for the set theorems
/// (T1.1, T2.1, T2.3, T2.4), m otherwise.
struct TheoremParams {
  int m = 0;
  int k = 0;
  int t = 1;
  int s = 1;
};

enum class UniquenessVerdict { unique_up_to_iso, multiple_classes, not_checked };
std::string_view to_string(UniquenessVerdict verdict);

struct VerifyOptions {
  bool uniqueness = false;
  std::size_t enumeration_cap = 20000;
  SearchOptions search;
};

struct VerifyReport {
  std::string theorem;
  TheoremParams params;
  bool set_theorem = false;  ///< params.m is n
  std::optional<Count> analytic_bound;
  std::optional<Count> constructed_size;
  std::optional<int> search_optimum;
  SearchStatus status = SearchStatus::proved_optimal;
  UniquenessVerdict uniqueness_verdict = UniquenessVerdict::not_checked;
  std::optional<int> optimal_classes;
  bool hypothesis_met = true;
  bool match = true;  ///< every present value is equal
  std::optional<bool> witness_isomorphic_to_construction;
  std::uint64_t nodes_explored = 0;
  std::int64_t elapsed_ms = 0;
  std::vector<std::string> notes;
};

/// T1.1, T1.4, T2.1, T2.3, T2.4, T3.3, T3.4, T3.5, T4.1, T4.8.
std::vector<std::string_view> theorem_ids();

/// Bound, construction and exact search for one theorem. Parameters outside
/// the theorem's hypothesis still run; the report carries
/// hypothesis_met = false, and a bound or construction that is undefined
/// there is left absent with a note. Unknown ids throw contract_error.
VerifyReport verify_theorem(std::string_view theorem, const TheoremParams& params,
                            const VerifyOptions& options = {});

/// JSON text with the stable field names.
std::string report_json(const VerifyReport& report);
/// Fixed-width text table.
std::string report_table(const VerifyReport& report);

/// 0 verified (or hypothesis not met), 1 mismatch under the hypothesis,
/// 3 node limit hit.
int report_exit_code(const VerifyReport& report);

}  // namespace msekr

#endif  // MSEKR_VERIFY_HPP
