#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jackpoly {

enum class Check {
  eigen,
  orthogonality,
  triangularity,
  normalization,
  integrality,
  positivity,
  commutator,
  dunkl_relations,
  oracle,
};

/// Every check in canonical report order.
std::vector<Check> all_checks();
std::string_view check_name(Check c);
std::optional<Check> parse_check(std::string_view name);

struct CheckOutcome {
  Check check;
  std::size_t passed = 0;
  std::size_t total = 0;
  /// Full description of the first failing case in canonical order.
  std::optional<std::string> counterexample;

  bool ok() const noexcept { return passed == total; }
};

struct VerifyOptions {
  unsigned max_weight = 1;
  /// Run in canonical order regardless of the order given here.
  std::vector<Check> checks;
  unsigned jobs = 1;
  /// Randomized operator-identity cases for the dunkl-relations check.
  std::size_t commutation_cases = 200;
  std::size_t restricted_cases = 100;
  std::uint64_t seed = 20240615;
};

struct VerifyReport {
  unsigned max_weight = 0;
  std::vector<CheckOutcome> outcomes;

  bool all_passed() const noexcept;
  /// One "name: passed/total pass" line per check, then the first
  /// counterexample if any check failed.
  std::string render() const;
};

/// Runs the selected checks over every partition of weight 0..max_weight,
/// each computed in n = max(|lambda|, 1) variables. The commutator check covers
/// l(lambda) <= i <= n <= min(max_weight, 4) for |lambda| <= max_weight.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace jackpoly
