#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fatpoints/oracle.hpp"

namespace fatpoints {

inline constexpr int kMaxReseeds = 3;

struct HilbertComparison {
  std::int64_t t = 0;
  std::int64_t oracle = 0;
  std::int64_t conjectured = 0;
};

struct VerifyReport {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::uint32_t p = kDefaultPrime;
  std::uint64_t seed = 0;       // as requested
  std::uint64_t seed_used = 0;  // seed of the last attempt
  int attempts = 0;

  std::int64_t conjectured_alpha = 0;
  std::int64_t oracle_alpha = 0;
  std::vector<HilbertComparison> hilbert;  // t = alpha-1, alpha, alpha+1

  bool generators_checked = false;
  std::vector<std::pair<std::int64_t, std::int64_t>> generators;  // (t, count) at alpha, alpha+1
  std::pair<std::int64_t, std::int64_t> expected_generators{0, 0};  // (a, b)

  // Over every oracle evaluation of every attempt.
  bool monotone = true;
  bool above_count_bound = true;
  std::int64_t oracle_calls = 0;

  bool match = false;
};

// Cross-checks the oracle against the conjectured Hilbert function, alpha,
// and (when requested) the generator counts (a, b). A random sample can only
// overshoot the generic Hilbert function, so on mismatch the check is retried
// with up to `max_reseeds` fresh samples. Generators default to being checked
// for even squares n. Requires n >= 10.
VerifyReport verify_conjectures(std::int64_t n, std::int64_t m, std::uint32_t p, std::uint64_t seed,
                                std::optional<bool> check_generators = std::nullopt,
                                int max_reseeds = kMaxReseeds);

// alpha_oracle under the same reseed policy, retrying until the sample agrees
// with `expected` or the reseeds run out. Returns the last sample's alpha.
std::int64_t alpha_oracle_with_reseeds(std::int64_t n, std::int64_t m, std::uint32_t p,
                                       std::uint64_t seed, std::int64_t expected,
                                       int max_reseeds = kMaxReseeds);

}  // namespace fatpoints
