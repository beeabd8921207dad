#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qneg {

/// Inclusive integer range, written "lo..hi" or as a single integer.
struct SweepRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  /// Throws std::invalid_argument on malformed text or lo > hi.
  static SweepRange parse(std::string_view text);
  std::int64_t size() const noexcept { return hi - lo + 1; }
  friend bool operator==(const SweepRange&, const SweepRange&) = default;
};

struct SweepParams {
  SweepRange n{-10, 10};
  SweepRange k{-10, 10};
  SweepRange m{2, 9};
  std::optional<std::int64_t> p;  // suite-specific default when unset
  std::int64_t truncation = 10;
};

enum class CaseStatus { Passed, Failed, Skipped };

struct CaseOutcome {
  CaseStatus status = CaseStatus::Passed;
  std::string label;
  std::string detail;
};

struct SweepReport {
  std::string suite;
  std::size_t checked = 0;  // cases evaluated; skipped cases are not counted
  std::size_t passed = 0;
  std::vector<CaseOutcome> failures;  // in case order
  std::vector<std::string> skipped;   // labels, in case order

  bool all_passed() const noexcept { return passed == checked; }
};

enum class Execution { Serial, Parallel };

/// One identity check over one parameter tuple.
struct SweepCase {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  int variant = 0;
};

using CaseCheck = std::function<CaseOutcome(const SweepCase&)>;

/**
 * Evaluates every case. The serial path is the reference; the parallel path
 * distributes cases over OpenMP threads and must return the identical vector.
 * Exceptions thrown by a check become Failed outcomes.
 */
std::vector<CaseOutcome> evaluate_cases(const std::vector<SweepCase>& cases,
                                        const CaseCheck& check, Execution execution);

/// Suite names accepted by run_suite, in display order.
const std::vector<std::string_view>& suite_names();
bool is_suite(std::string_view name);

/// Runs a named identity sweep. Throws std::invalid_argument for an unknown
/// suite or parameters the suite cannot use.
SweepReport run_suite(std::string_view suite, const SweepParams& params,
                      Execution execution = Execution::Parallel);

}  // namespace qneg
