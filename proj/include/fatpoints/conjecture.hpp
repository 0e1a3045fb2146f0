#pragma once

#include <cstdint>

namespace fatpoints {

// Graded Betti numbers of the conjectured resolution
//   0 -> R[-a-2]^d_ + R[-a-1]^c -> R[-a-1]^b + R[-a]^a -> I -> 0.
struct BettiData {
  std::int64_t alpha = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d_ = 0;

  friend bool operator==(const BettiData&, const BettiData&) = default;
};

// C(x, 2), taken to be 0 for x < 2.
std::int64_t choose2(std::int64_t x);

// n C(m+1, 2): the number of linear conditions imposed by n points of multiplicity m.
std::int64_t condition_count(std::int64_t n, std::int64_t m);

// C(t+2, 2) - n C(m+1, 2), possibly negative.
std::int64_t expected_dimension(std::int64_t n, std::int64_t m, std::int64_t t);

// max{0, C(t+2,2) - n C(m+1,2)}. Requires n >= 10, m >= 1, t >= 0.
std::int64_t conjectured_hilbert(std::int64_t n, std::int64_t m, std::int64_t t);

// Least t with C(t+2,2) > n C(m+1,2).
std::int64_t conjectured_alpha(std::int64_t n, std::int64_t m);

// Throws ResolutionInconsistency if d_ would be negative.
BettiData conjectured_resolution(std::int64_t n, std::int64_t m);

// a C(t-alpha+2, 2) + (b - c) C(t-alpha+1, 2) - d_ C(t-alpha, 2): the
// dimension in degree t predicted by the resolution. Requires t >= alpha.
std::int64_t resolution_hilbert_check(const BettiData& betti, std::int64_t t);

}  // namespace fatpoints
