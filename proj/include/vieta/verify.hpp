#pragma once

// Oracle-equivalence and property suites shared by `vieta verify` and the
// acceptance test. Suite k (1..8) exercises one acceptance criterion.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vieta/kernels.hpp"

namespace vieta {

struct SuiteResult {
  int id = 0;
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::size_t resampled = 0; // ill-conditioned numeric instances replaced
  double seconds = 0;
  double time_limit = 0; // 0: none
  std::string message;   // first failure, if any

  bool passed() const;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::optional<std::size_t> cases; // overrides every suite's default count
  Exec exec = Exec::parallel;
};

constexpr int kSuiteCount = 8;

SuiteResult run_suite(int id, const VerifyOptions& opts);
std::vector<SuiteResult> run_all_suites(const VerifyOptions& opts);

} // namespace vieta
