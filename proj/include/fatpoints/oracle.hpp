#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "fatpoints/matrix.hpp"

namespace fatpoints {

inline constexpr std::uint32_t kDefaultPrime = 65521;

// A point of the projective plane in the chart x = 1: (1 : y : z).
struct AffinePoint {
  std::uint32_t y = 0;
  std::uint32_t z = 0;
  friend auto operator<=>(const AffinePoint&, const AffinePoint&) = default;
};

struct PointSet {
  std::uint32_t p = kDefaultPrime;
  std::vector<AffinePoint> points;
};

struct OracleProblem {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t t = 0;
  std::uint32_t p = kDefaultPrime;
  std::uint64_t seed = 0;
};

// splitmix64 finalizer; all derived seeds go through it.
std::uint64_t mix64(std::uint64_t x);

// seed xor hash(n, m, t).
std::uint64_t derive_seed(std::uint64_t seed, std::int64_t n, std::int64_t m, std::int64_t t);

// Seed for the given retry attempt; attempt 0 is the seed itself.
std::uint64_t attempt_seed(std::uint64_t seed, int attempt);

// n distinct pseudorandom points (1 : y : z) over F_p, deterministic in
// (n, p, seed). Requires p prime and n < p^2.
PointSet sample_points(std::int64_t n, std::uint32_t p, std::uint64_t seed);

// Index of x^a y^b z^(t-a-b) among degree-t monomials in graded-lex order
// (x > y > z): x^t first, z^t last.
std::size_t monomial_index(std::int64_t a, std::int64_t b, std::int64_t t);

// Exponents (a, b, c) of the degree-t monomials in graded-lex order.
std::vector<std::array<std::int64_t, 3>> monomials(std::int64_t t);

// One row per (point, (i, j)) with i + j < m, one column per degree-t
// monomial. The entry is d^i/dy^i d^j/dz^j of the dehomogenized monomial
// y^b z^c at the point. Rows are point-major, then by i + j, then i
// descending. Requires p > t and p > m.
PrimeMatrix conditions_matrix(const PointSet& points, std::int64_t m, std::int64_t t);

// Hilbert-function oracle bound to one point sample. Every evaluated degree
// is cached so that invariants can be checked across all probes.
class SampleOracle {
 public:
  SampleOracle(PointSet points, std::int64_t m);

  const PointSet& points() const noexcept { return points_; }
  std::int64_t n() const noexcept { return static_cast<std::int64_t>(points_.points.size()); }
  std::int64_t m() const noexcept { return m_; }

  // C(t+2, 2) - rank(conditions_matrix(t)).
  std::int64_t hilbert(std::int64_t t);

  // Least t in [0, bound] with hilbert(t) > 0, located by bisection (the
  // ideal pieces grow with t). Throws ScanExhausted if hilbert(bound) == 0.
  std::int64_t alpha(std::int64_t bound);

  // Number of minimal generators in degree t:
  // hilbert(t) - dim(x, y, z) * I_{t-1}.
  std::int64_t generator_count(std::int64_t t);

  // Every (t, h) evaluated so far, ordered by t.
  const std::map<std::int64_t, std::int64_t>& probes() const noexcept { return cache_; }

  // h nondecreasing and >= the conditions-count lower bound over all probes.
  bool probes_monotone() const;
  bool probes_above_count_bound() const;

 private:
  PointSet points_;
  std::int64_t m_;
  std::map<std::int64_t, std::int64_t> cache_;
};

// Scan bound used by alpha_oracle: conjectured_alpha + 5 for n >= 10, else 3 n m.
std::int64_t alpha_scan_bound(std::int64_t n, std::int64_t m);

std::int64_t hilbert_oracle(const OracleProblem& problem);
std::int64_t alpha_oracle(std::int64_t n, std::int64_t m, std::uint32_t p, std::uint64_t seed);
std::vector<std::pair<std::int64_t, std::int64_t>> generator_counts_oracle(
    std::int64_t n, std::int64_t m, std::uint32_t p, std::uint64_t seed, std::int64_t t_lo,
    std::int64_t t_hi);

}  // namespace fatpoints
