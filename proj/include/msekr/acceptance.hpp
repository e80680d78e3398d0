#ifndef MSEKR_ACCEPTANCE_HPP
#define MSEKR_ACCEPTANCE_HPP

#include <iosfwd>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "msekr/family.hpp"

namespace msekr {

enum class SuiteProfile { quick, full };

/// quick or full; throws contract_error otherwise.
SuiteProfile parse_profile(std::string_view text);

struct CriterionResult {
  std::string id;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// AC-1..AC-6 for quick, AC-1..AC-10 for full.
std::vector<std::string> criterion_ids(SuiteProfile profile);

/// Runs one criterion. Exceptions are caught and reported as failures.
CriterionResult run_criterion(std::string_view id);

/// Runs the profile, printing one line per criterion to `out` as each
/// finishes.
std::vector<CriterionResult> run_suite(SuiteProfile profile, std::ostream& out);

std::string format_result(const CriterionResult& result);

/// Random t-intersecting family of k-multisets of [m]: members are drawn in
/// random order and kept when they t-intersect everything kept so far, until
/// `max_size` members are kept or the universe runs out.
Family random_t_intersecting_family(int m, int k, int t, std::size_t max_size,
                                    std::mt19937_64& rng);

}  // namespace msekr

#endif  // MSEKR_ACCEPTANCE_HPP
