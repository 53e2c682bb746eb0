#pragma once

// Seeded acceptance checks, grouped into suites. Every check uses exact
// arithmetic; a sample index i ≡ 9 (mod 10) runs over ℚ, the rest over 𝔽_65521.

#include <cstdint>
#include <string>
#include <vector>

namespace veronese {

enum class Suite { Conic, Gale, Higher, Transversal, Dimension, All };

Suite parse_suite(const std::string& name);
std::string to_string(Suite s);

/// Criterion numbers 1..10 belonging to a suite.
std::vector<int> criteria_of(Suite s);

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyReport {
  Suite suite = Suite::All;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
};

inline constexpr int kCriterionCount = 10;

/// Runs one criterion; never throws (an exception becomes a failed check).
CheckResult run_criterion(int criterion, std::uint64_t seed);

VerifyReport run_suite(Suite suite, std::uint64_t seed);

/// Deterministic sub-seed for sample `index` of stream `stream`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

}  // namespace veronese
