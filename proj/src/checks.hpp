#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wqo {

/// Shared knobs for the property suites. Exhaustive suites ignore
/// `cases`; seeded suites ignore `maxSize` beyond generator bounds.
struct CheckConfig {
  uint64_t seed = 1;
  int cases = 100;
  int maxSize = 6;
  unsigned omega = 1;
};

struct CheckResult {
  std::string suite;
  uint64_t seed = 0;
  int ok = 0;
  int total = 0;
  std::vector<std::string> failures;

  bool pass() const { return total > 0 && ok == total; }
  // Failure lines (capped), then "OK/TOTAL ok".
  std::string text() const;
};

// Oracle agreement for le_t / le_k on enumerated tree pairs.
CheckResult checkTrees(const CheckConfig& cfg);
// Random normal-sequence properties: reflexivity, transitivity, length
// monotonicity, indecomposable splitting, word-case agreement with the
// Higman oracle, expansion-width stability.
CheckResult checkSequences(const CheckConfig& cfg);
// Round-trip equivalence of the tree/sequence maps on random instances.
CheckResult checkCorrespondence(const CheckConfig& cfg);
// Linearity of the epsilon-term order, value agreement on finite terms,
// order reflection of the tree image.
CheckResult checkEpsilon(const CheckConfig& cfg);

// Dispatch by suite name: trees|sequences|correspondence|epsilon.
CheckResult runSuite(std::string_view name, const CheckConfig& cfg);

}  // namespace wqo
