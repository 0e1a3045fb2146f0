#include "fatpoints/conjecture.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fatpoints/errors.hpp"
#include "fatpoints/tuple.hpp"

namespace fatpoints {

namespace {

void validate(std::int64_t n, std::int64_t m) {
  require_int32(n, "n");
  require_int32(m, "m");
  if (n < 10) throw ParameterError("conjectured formulas cover n >= 10 only, got n = " + std::to_string(n));
  if (m < 1) throw ParameterError("m must be >= 1");
}

}  // namespace

std::int64_t choose2(std::int64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }

std::int64_t condition_count(std::int64_t n, std::int64_t m) { return n * choose2(m + 1); }

std::int64_t expected_dimension(std::int64_t n, std::int64_t m, std::int64_t t) {
  return choose2(t + 2) - condition_count(n, m);
}

std::int64_t conjectured_hilbert(std::int64_t n, std::int64_t m, std::int64_t t) {
  validate(n, m);
  require_int32(t, "t");
  if (t < 0) throw ParameterError("t must be >= 0");
  return std::max<std::int64_t>(0, expected_dimension(n, m, t));
}

std::int64_t conjectured_alpha(std::int64_t n, std::int64_t m) {
  validate(n, m);
  const auto target = condition_count(n, m);
  // C(t+2,2) ~ t^2/2; start just below the real root and walk up.
  auto t = std::max<std::int64_t>(0, static_cast<std::int64_t>(std::sqrt(2.0 * static_cast<double>(target))) - 3);
  while (t > 0 && choose2(t + 2) > target) --t;
  while (choose2(t + 2) <= target) ++t;
  return t;
}

BettiData conjectured_resolution(std::int64_t n, std::int64_t m) {
  BettiData betti;
  betti.alpha = conjectured_alpha(n, m);
  const auto h0 = conjectured_hilbert(n, m, betti.alpha);
  const auto h1 = conjectured_hilbert(n, m, betti.alpha + 1);
  betti.a = h0;
  betti.b = std::max<std::int64_t>(h1 - 3 * h0, 0);
  betti.c = std::max<std::int64_t>(3 * h0 - h1, 0);
  betti.d_ = betti.a + betti.b - betti.c - 1;
  if (betti.d_ < 0) {
    throw ResolutionInconsistency("negative syzygy count d = " + std::to_string(betti.d_) +
                                  " for n = " + std::to_string(n) + ", m = " + std::to_string(m));
  }
  return betti;
}

std::int64_t resolution_hilbert_check(const BettiData& betti, std::int64_t t) {
  if (t < betti.alpha) {
    throw ParameterError("resolution check needs t >= alpha = " + std::to_string(betti.alpha));
  }
  const auto e = t - betti.alpha;
  return betti.a * choose2(e + 2) + (betti.b - betti.c) * choose2(e + 1) - betti.d_ * choose2(e);
}

}  // namespace fatpoints
