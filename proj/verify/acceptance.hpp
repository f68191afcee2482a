#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ulab::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCriterionCount = 13;

/// Runs one acceptance criterion (1..13). Randomized parts draw from `seed`.
CriterionResult run_criterion(int id, std::uint64_t seed);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

/// "PASS  3  quantum compatibility  (detail)" style line.
std::string format_result(const CriterionResult& r);

}  // namespace ulab::verify
