#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include <boost/rational.hpp>

#include "fatpoints/tuple.hpp"

namespace fatpoints {

using Rational = boost::rational<std::int64_t>;

struct FailingCondition {
  enum class Kind { condition1, condition2 };
  Kind kind = Kind::condition1;
  std::int64_t step = 0;  // i for condition (1); omega - 1 for condition (2)
};

struct CertificateOutcome {
  bool certified = false;
  std::optional<FailingCondition> failing_condition;
  std::int64_t omega = 0;
  std::int64_t mu = 0;            // t_{omega-1} d - D_{omega-1} . C
  std::int64_t genus = 0;
  std::int64_t condition2_lhs = 0;  // (t_{omega-1} + 1)(t_{omega-1} + 2)
  // False when (d, r) falls outside r d(d+1)/2 <= r^2 <= d^2 n; the
  // outcome is still computed but carries no known geometric guarantee.
  bool validated_regime = false;
  ReductionTrace trace;
};

struct TheoremStatus {
  bool applicable = false;
  std::int64_t s = 0;
  std::optional<std::int64_t> x;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> predicted_alpha;
};

/// Largest j >= 0 with j(j+1) <= i. Requires i >= 1.
std::int64_t l_index(std::int64_t i);

/// True when r d(d+1)/2 <= r^2 <= d^2 n.
bool in_validated_regime(std::int64_t n, std::int64_t d, std::int64_t r);

/// Runs the reduction from (t, m^n) against C = (d, 1^r, 0^(n-r)) and checks
///   (1) D_i . C <= g - 1 for 0 <= i < omega - 1,
///   (2) (t_{omega-1} + 1)(t_{omega-1} + 2) <= 2 mu.
/// A certified outcome means alpha(n, m) > t.
CertificateOutcome certify_alpha_exceeds(std::int64_t n, std::int64_t m, std::int64_t t,
                                         std::int64_t d, std::int64_t r);

/// Analytic scan ceiling floor((m r + g - 1) / d) + d. Above it condition (1)
/// already fails at i = 0 (or omega = 1 is impossible).
std::int64_t certification_ceiling(std::int64_t m, std::int64_t d, std::int64_t r);

/// Largest certified t in [0, ceiling], scanning downward; -1 if none.
/// When `ceiling` is absent the analytic ceiling is used.
std::int64_t best_certified_t(std::int64_t n, std::int64_t m, std::int64_t d, std::int64_t r,
                              std::optional<std::int64_t> ceiling = std::nullopt);

/// For D_0 = (t, m^n): ceil(n m / r), the first step with all-zero multiplicities.
std::int64_t uniform_omega_prime(std::int64_t n, std::int64_t m, std::int64_t r);

// Closed form of D_i for a uniform start, valid for 0 <= i < omega'.
// With i(n - r) = q n + rho, D_i = (t - i d, (m-i+q+1)^rho, (m-i+q)^(n-rho)).
MultiplicityTuple lemma_closed_form(std::int64_t t, std::int64_t m, std::int64_t n, std::int64_t d,
                                    std::int64_t r, std::int64_t i);

// Exact bounds on D_i . C - D_0 . C for a uniform start:
//   i(r^2/n - d^2) - (r - r^2/n)  <=  .  <=  i(r^2/n - d^2).
std::pair<Rational, Rational> lemma_intersection_bounds(std::int64_t t, std::int64_t m,
                                                        std::int64_t n, std::int64_t d,
                                                        std::int64_t r, std::int64_t i);

// Pieces of the closed-form lower bound, exposed for reporting.
struct AlphaLowerBound {
  std::int64_t u = 0;
  std::int64_t rho = 0;
  std::int64_t l = 0;
  std::int64_t genus_term = 0;  // floor((m r + g - 1) / d)
  std::int64_t tail_term = 0;   // l + u d
  std::int64_t bound = 0;       // 1 + min(genus_term, tail_term)
};

/// alpha(n, m) >= 1 + min{ floor((m r + g - 1)/d), l + u d } where
/// n m = u r + rho with 0 < rho <= r and l = min{l_{2 rho}, d} - 1.
/// Throws PreconditionError naming the failed inequality.
AlphaLowerBound aprop_lower_bound_detail(std::int64_t n, std::int64_t m, std::int64_t r, std::int64_t d);
std::int64_t aprop_lower_bound(std::int64_t n, std::int64_t m, std::int64_t r, std::int64_t d);

/// Decides whether m = x + k(s - 1) with k >= 0 and x in the admissible
/// window for n = s^2 >= 10. Picks the smallest k.
TheoremStatus mainthm_parameters(std::int64_t n, std::int64_t m);

// Integer square root; nullopt when n is not a perfect square.
std::optional<std::int64_t> exact_sqrt(std::int64_t n);

}  // namespace fatpoints
