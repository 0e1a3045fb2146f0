#include "fatpoints/oracle.hpp"

#include <limits>
#include <random>
#include <set>
#include <string>

#include "fatpoints/conjecture.hpp"
#include "fatpoints/errors.hpp"
#include "fatpoints/tuple.hpp"

namespace fatpoints {

namespace {

constexpr std::size_t kMaxMatrixEntries = std::size_t{1} << 28;

void validate_problem(std::int64_t n, std::int64_t m, std::int64_t t, std::uint32_t p) {
  require_int32(n, "n");
  require_int32(m, "m");
  require_int32(t, "t");
  if (n < 1) throw ParameterError("n must be >= 1");
  if (m < 1) throw ParameterError("m must be >= 1");
  if (t < 0) throw ParameterError("t must be >= 0");
  if (static_cast<std::int64_t>(p) <= t || static_cast<std::int64_t>(p) <= m) {
    throw ParameterError("characteristic " + std::to_string(p) + " must exceed t = " + std::to_string(t) +
                         " and m = " + std::to_string(m));
  }
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::int64_t n, std::int64_t m, std::int64_t t) {
  auto h = mix64(static_cast<std::uint64_t>(n));
  h = mix64(h ^ static_cast<std::uint64_t>(m));
  h = mix64(h ^ static_cast<std::uint64_t>(t));
  return seed ^ h;
}

std::uint64_t attempt_seed(std::uint64_t seed, int attempt) {
  return attempt == 0 ? seed : mix64(seed ^ mix64(static_cast<std::uint64_t>(attempt)));
}

PointSet sample_points(std::int64_t n, std::uint32_t p, std::uint64_t seed) {
  if (!is_prime(p)) throw ParameterError("modulus " + std::to_string(p) + " is not prime");
  if (n < 1) throw ParameterError("n must be >= 1");
  if (static_cast<std::uint64_t>(n) >= static_cast<std::uint64_t>(p) * p) {
    throw ParameterError("cannot place " + std::to_string(n) + " distinct points over F_" + std::to_string(p));
  }

  // mt19937_64 output is fully specified by the standard; the reduction to
  // [0, p) is done here by rejection so samples match across platforms.
  std::mt19937_64 rng(seed);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % p;
  auto draw = [&] {
    std::uint64_t v;
    do v = rng(); while (v >= limit);
    return static_cast<std::uint32_t>(v % p);
  };

  PointSet out{p, {}};
  std::set<AffinePoint> seen;
  while (static_cast<std::int64_t>(out.points.size()) < n) {
    AffinePoint pt;
    pt.y = draw();
    pt.z = draw();
    if (seen.insert(pt).second) out.points.push_back(pt);
  }
  return out;
}

std::size_t monomial_index(std::int64_t a, std::int64_t b, std::int64_t t) {
  const auto k = t - a;
  return static_cast<std::size_t>(k * (k + 1) / 2 + (t - a - b));
}

std::vector<std::array<std::int64_t, 3>> monomials(std::int64_t t) {
  std::vector<std::array<std::int64_t, 3>> out;
  out.reserve(static_cast<std::size_t>(choose2(t + 2)));
  for (auto a = t; a >= 0; --a) {
    for (auto b = t - a; b >= 0; --b) out.push_back({a, b, t - a - b});
  }
  return out;
}

PrimeMatrix conditions_matrix(const PointSet& points, std::int64_t m, std::int64_t t) {
  const auto n = static_cast<std::int64_t>(points.points.size());
  validate_problem(n, m, t, points.p);
  const PrimeField field(points.p);

  const auto rows = static_cast<std::size_t>(condition_count(n, m));
  const auto cols = static_cast<std::size_t>(choose2(t + 2));
  if (rows * cols > kMaxMatrixEntries) {
    throw ParameterError("conditions matrix " + std::to_string(rows) + " x " + std::to_string(cols) +
                         " is beyond desk scale");
  }
  PrimeMatrix out(rows, cols, points.p);
  const auto monos = monomials(t);

  // falling[e][k] = e (e-1) ... (e-k+1) mod p, for e <= t and k < m
  const auto kmax = static_cast<std::size_t>(std::min(m, t + 1));
  std::vector<std::vector<std::uint32_t>> falling(static_cast<std::size_t>(t + 1),
                                                  std::vector<std::uint32_t>(kmax, 0));
  for (std::int64_t e = 0; e <= t; ++e) {
    std::uint32_t acc = 1;
    for (std::size_t k = 0; k < kmax && static_cast<std::int64_t>(k) <= e; ++k) {
      falling[static_cast<std::size_t>(e)][k] = acc;
      acc = field.mul(acc, field.from(static_cast<std::uint64_t>(e) - k));
    }
  }

  std::vector<std::uint32_t> ypow(static_cast<std::size_t>(t + 1));
  std::vector<std::uint32_t> zpow(static_cast<std::size_t>(t + 1));
  std::size_t row = 0;
  for (const auto& pt : points.points) {
    ypow[0] = zpow[0] = 1;
    for (std::size_t e = 1; e < ypow.size(); ++e) {
      ypow[e] = field.mul(ypow[e - 1], pt.y);
      zpow[e] = field.mul(zpow[e - 1], pt.z);
    }
    for (std::int64_t order = 0; order < m; ++order) {
      for (auto i = order; i >= 0; --i, ++row) {
        const auto j = order - i;
        auto dst = out.row(row);
        if (i > t || j > t) continue;
        for (std::size_t col = 0; col < cols; ++col) {
          const auto b = monos[col][1];
          const auto c = monos[col][2];
          if (b < i || c < j) continue;
          const auto coeff = field.mul(falling[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)],
                                       falling[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)]);
          dst[col] = field.mul(coeff, field.mul(ypow[static_cast<std::size_t>(b - i)],
                                                zpow[static_cast<std::size_t>(c - j)]));
        }
      }
    }
  }
  return out;
}

SampleOracle::SampleOracle(PointSet points, std::int64_t m) : points_(std::move(points)), m_(m) {
  validate_problem(n(), m_, 0, points_.p);
}

std::int64_t SampleOracle::hilbert(std::int64_t t) {
  if (auto it = cache_.find(t); it != cache_.end()) return it->second;
  const auto h = choose2(t + 2) - static_cast<std::int64_t>(rank(conditions_matrix(points_, m_, t)));
  cache_.emplace(t, h);
  return h;
}

std::int64_t SampleOracle::alpha(std::int64_t bound) {
  if (bound < 0 || hilbert(bound) == 0) {
    throw ScanExhausted("no nonzero ideal piece up to degree " + std::to_string(bound) + " for n = " +
                        std::to_string(n()) + ", m = " + std::to_string(m_));
  }
  // A nonzero form of degree < m cannot vanish to order m anywhere.
  std::int64_t lo = std::min(m_ - 1, bound);  // hilbert(lo) == 0 unless lo == bound
  std::int64_t hi = bound;
  if (lo == hi) return hi;
  while (hi - lo > 1) {
    const auto mid = lo + (hi - lo) / 2;
    (hilbert(mid) > 0 ? hi : lo) = mid;
  }
  return hi;
}

std::int64_t SampleOracle::generator_count(std::int64_t t) {
  const auto h = hilbert(t);
  if (t == 0 || h == 0) return h;

  const auto kernel = null_space(conditions_matrix(points_, m_, t - 1));
  if (kernel.empty()) return h;

  const auto prev = monomials(t - 1);
  PrimeMatrix products(3 * kernel.size(), static_cast<std::size_t>(choose2(t + 2)), points_.p);
  for (std::size_t k = 0; k < kernel.size(); ++k) {
    for (std::size_t col = 0; col < prev.size(); ++col) {
      const auto v = kernel[k][col];
      if (v == 0) continue;
      const auto [a, b, c] = prev[col];
      products.at(3 * k, monomial_index(a + 1, b, t)) = v;
      products.at(3 * k + 1, monomial_index(a, b + 1, t)) = v;
      products.at(3 * k + 2, monomial_index(a, b, t)) = v;
    }
  }
  const auto count = h - static_cast<std::int64_t>(rank(std::move(products)));
  if (count < 0) {
    throw std::logic_error("negative generator count in degree " + std::to_string(t) +
                           "; elimination is inconsistent");
  }
  return count;
}

bool SampleOracle::probes_monotone() const {
  std::int64_t prev = 0;
  for (const auto& [t, h] : cache_) {
    if (h < prev) return false;
    prev = h;
  }
  return true;
}

bool SampleOracle::probes_above_count_bound() const {
  for (const auto& [t, h] : cache_) {
    if (h < std::max<std::int64_t>(0, expected_dimension(n(), m_, t))) return false;
  }
  return true;
}

std::int64_t alpha_scan_bound(std::int64_t n, std::int64_t m) {
  return n >= 10 ? conjectured_alpha(n, m) + 5 : 3 * n * m;
}

std::int64_t hilbert_oracle(const OracleProblem& problem) {
  validate_problem(problem.n, problem.m, problem.t, problem.p);
  SampleOracle oracle(sample_points(problem.n, problem.p, problem.seed), problem.m);
  return oracle.hilbert(problem.t);
}

std::int64_t alpha_oracle(std::int64_t n, std::int64_t m, std::uint32_t p, std::uint64_t seed) {
  const auto bound = alpha_scan_bound(n, m);
  validate_problem(n, m, bound, p);
  SampleOracle oracle(sample_points(n, p, seed), m);
  return oracle.alpha(bound);
}

std::vector<std::pair<std::int64_t, std::int64_t>> generator_counts_oracle(
    std::int64_t n, std::int64_t m, std::uint32_t p, std::uint64_t seed, std::int64_t t_lo,
    std::int64_t t_hi) {
  if (t_lo > t_hi) throw ParameterError("t_lo must not exceed t_hi");
  validate_problem(n, m, t_hi, p);
  if (t_lo < 0) throw ParameterError("t_lo must be >= 0");
  SampleOracle oracle(sample_points(n, p, seed), m);
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (auto t = t_lo; t <= t_hi; ++t) out.emplace_back(t, oracle.generator_count(t));
  return out;
}

}  // namespace fatpoints
