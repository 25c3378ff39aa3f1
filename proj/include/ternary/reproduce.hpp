#pragma once

// Named regression suites: each fixture recomputes one published number,
// factorization or verdict from scratch and compares it with the expected
// value.

#include <cstdint>
#include <string>
#include <vector>

namespace ternary {

struct FixtureResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Targets: example-3.1, example-3.2, lemma-3.2, theorem-3.1, theorem-4.1,
/// theorem-4.2, all. Throws std::invalid_argument for anything else.
std::vector<FixtureResult> reproduce(const std::string& target, std::uint64_t seed = 0);

const std::vector<std::string>& reproduce_targets();

}  // namespace ternary
