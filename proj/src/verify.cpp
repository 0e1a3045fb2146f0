#include "fatpoints/verify.hpp"

#include "fatpoints/certifier.hpp"
#include "fatpoints/conjecture.hpp"
#include "fatpoints/errors.hpp"

namespace fatpoints {

VerifyReport verify_conjectures(std::int64_t n, std::int64_t m, std::uint32_t p, std::uint64_t seed,
                                std::optional<bool> check_generators, int max_reseeds) {
  if (n < 10) throw ParameterError("verification covers n >= 10 only, got n = " + std::to_string(n));
  const auto betti = conjectured_resolution(n, m);

  VerifyReport report;
  report.n = n;
  report.m = m;
  report.p = p;
  report.seed = seed;
  report.conjectured_alpha = betti.alpha;
  report.expected_generators = {betti.a, betti.b};
  if (check_generators) {
    report.generators_checked = *check_generators;
  } else {
    const auto root = exact_sqrt(n);
    report.generators_checked = root && *root % 2 == 0;
  }

  for (int attempt = 0; attempt <= max_reseeds; ++attempt) {
    report.attempts = attempt + 1;
    report.seed_used = attempt_seed(seed, attempt);
    SampleOracle oracle(sample_points(n, p, report.seed_used), m);

    report.oracle_alpha = oracle.alpha(alpha_scan_bound(n, m));
    report.hilbert.clear();
    bool match = report.oracle_alpha == betti.alpha;
    for (auto t = betti.alpha - 1; t <= betti.alpha + 1; ++t) {
      const HilbertComparison cmp{t, oracle.hilbert(t), conjectured_hilbert(n, m, t)};
      match = match && cmp.oracle == cmp.conjectured;
      report.hilbert.push_back(cmp);
    }
    report.generators.clear();
    if (report.generators_checked) {
      for (auto t = betti.alpha; t <= betti.alpha + 1; ++t) {
        report.generators.emplace_back(t, oracle.generator_count(t));
      }
      match = match && report.generators[0].second == betti.a && report.generators[1].second == betti.b;
    }

    report.monotone = report.monotone && oracle.probes_monotone();
    report.above_count_bound = report.above_count_bound && oracle.probes_above_count_bound();
    report.oracle_calls += static_cast<std::int64_t>(oracle.probes().size());
    report.match = match;
    if (match) break;
  }
  return report;
}

std::int64_t alpha_oracle_with_reseeds(std::int64_t n, std::int64_t m, std::uint32_t p,
                                       std::uint64_t seed, std::int64_t expected, int max_reseeds) {
  std::int64_t alpha = -1;
  for (int attempt = 0; attempt <= max_reseeds; ++attempt) {
    alpha = alpha_oracle(n, m, p, attempt_seed(seed, attempt));
    if (alpha == expected) break;
  }
  return alpha;
}

}  // namespace fatpoints
