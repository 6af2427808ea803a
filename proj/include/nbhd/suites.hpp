#ifndef NBHD_SUITES_HPP
#define NBHD_SUITES_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nbhd::suites {

/// `full` runs the published case counts; `quick` runs roughly a tenth.
enum class Level { quick, full };

Level parse_level(std::string_view name);

struct Result {
  int id = 0;
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  double seconds = 0;
  double time_limit = 0;  // 0 when the suite has no timing requirement
  std::string detail;     // first failure, or a summary of what was covered

  bool within_time() const { return time_limit <= 0 || seconds < time_limit; }
  bool passed() const { return failures == 0 && checks > 0 && within_time(); }
};

using SuiteFn = Result (*)(Level, std::uint64_t seed);

struct Suite {
  int id;
  const char* name;
  SuiteFn run;
};

std::span<const Suite> all_suites();

Result correspondence_suite(Level level, std::uint64_t seed);
Result supplementation_suite(Level level, std::uint64_t seed);
Result commutation_suite(Level level, std::uint64_t seed);
Result intersection_closure_suite(Level level, std::uint64_t seed);
Result filtration_theorem_suite(Level level, std::uint64_t seed);
Result transitive_filtration_suite(Level level, std::uint64_t seed);
Result closure_pipelines_suite(Level level, std::uint64_t seed);
Result search_sanity_suite(Level level, std::uint64_t seed);
Result finite_models_suite(Level level, std::uint64_t seed);

std::vector<Result> run_all(Level level, std::uint64_t seed);

/// One line: "[PASS] 3 commutation: 2256 checks, 0 failures, 0.41 s (...)".
std::string format(const Result& r);

}  // namespace nbhd::suites

#endif  // NBHD_SUITES_HPP
