#include "fatpoints/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fatpoints/errors.hpp"

namespace fatpoints {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

void validate_certifier_inputs(std::int64_t n, std::int64_t m, std::int64_t t, std::int64_t d,
                               std::int64_t r) {
  require_int32(n, "n");
  require_int32(m, "m");
  require_int32(t, "t");
  require_int32(d, "d");
  require_int32(r, "r");
  if (n < 1) throw ParameterError("n must be >= 1");
  if (m < 1) throw ParameterError("m must be >= 1");
  if (t < 0) throw ParameterError("t must be >= 0");
  if (d < 1) throw ParameterError("d must be >= 1");
  if (r < 1 || r > n) throw ParameterError("r must satisfy 1 <= r <= n");
}

}  // namespace

std::int64_t l_index(std::int64_t i) {
  if (i < 1) throw ParameterError("l_index requires i >= 1");
  auto j = static_cast<std::int64_t>(std::sqrt(static_cast<double>(i)));
  while (j * (j + 1) > i) --j;
  while ((j + 1) * (j + 2) <= i) ++j;
  return j;
}

bool in_validated_regime(std::int64_t n, std::int64_t d, std::int64_t r) {
  return r * d * (d + 1) <= 2 * r * r && r * r <= d * d * n;
}

CertificateOutcome certify_alpha_exceeds(std::int64_t n, std::int64_t m, std::int64_t t,
                                         std::int64_t d, std::int64_t r) {
  validate_certifier_inputs(n, m, t, d, r);
  const auto curve = ReductionCurve::make(n, d, r);

  CertificateOutcome out;
  out.genus = genus(d);
  out.validated_regime = in_validated_regime(n, d, r);
  out.trace = run_reduction(MultiplicityTuple::uniform(t, n, m), curve);
  out.omega = out.trace.omega;

  const auto last = out.omega - 1;  // omega >= 1 because t >= 0
  const auto& penultimate = out.trace.steps[static_cast<std::size_t>(last)];
  out.mu = penultimate.degree() * d - out.trace.intersections[static_cast<std::size_t>(last)];
  out.condition2_lhs = (penultimate.degree() + 1) * (penultimate.degree() + 2);

  for (std::int64_t i = 0; i < last; ++i) {
    if (out.trace.intersections[static_cast<std::size_t>(i)] > out.genus - 1) {
      out.failing_condition = FailingCondition{FailingCondition::Kind::condition1, i};
      return out;
    }
  }
  if (out.condition2_lhs > 2 * out.mu) {
    out.failing_condition = FailingCondition{FailingCondition::Kind::condition2, last};
    return out;
  }
  out.certified = true;
  return out;
}

std::int64_t certification_ceiling(std::int64_t m, std::int64_t d, std::int64_t r) {
  return floor_div(m * r + genus(d) - 1, d) + d;
}

std::int64_t best_certified_t(std::int64_t n, std::int64_t m, std::int64_t d, std::int64_t r,
                              std::optional<std::int64_t> ceiling) {
  validate_certifier_inputs(n, m, 0, d, r);
  const auto top = ceiling.value_or(certification_ceiling(m, d, r));
  require_int32(top, "scan ceiling");
  for (auto t = top; t >= 0; --t) {
    if (certify_alpha_exceeds(n, m, t, d, r).certified) return t;
  }
  return -1;
}

std::int64_t uniform_omega_prime(std::int64_t n, std::int64_t m, std::int64_t r) {
  return ceil_div(n * m, r);
}

MultiplicityTuple lemma_closed_form(std::int64_t t, std::int64_t m, std::int64_t n, std::int64_t d,
                                    std::int64_t r, std::int64_t i) {
  validate_certifier_inputs(n, m, t, d, r);
  const auto limit = uniform_omega_prime(n, m, r);
  if (i < 0 || i > limit - 1) {
    throw ParameterError("step index " + std::to_string(i) + " outside [0, " +
                         std::to_string(limit - 1) + "]");
  }
  const auto q = i * (n - r) / n;
  const auto rho = i * (n - r) % n;
  std::vector<std::int64_t> mults(static_cast<std::size_t>(n), m - i + q);
  std::fill_n(mults.begin(), rho, m - i + q + 1);
  return MultiplicityTuple::raw(t - i * d, std::move(mults));
}

std::pair<Rational, Rational> lemma_intersection_bounds(std::int64_t t, std::int64_t m,
                                                        std::int64_t n, std::int64_t d,
                                                        std::int64_t r, std::int64_t i) {
  validate_certifier_inputs(n, m, t, d, r);
  const auto limit = uniform_omega_prime(n, m, r);
  if (i < 0 || i > limit - 1) {
    throw ParameterError("step index " + std::to_string(i) + " outside [0, " +
                         std::to_string(limit - 1) + "]");
  }
  const Rational r2n(r * r, n);
  const Rational upper = Rational(i) * (r2n - d * d);
  const Rational lower = upper - (Rational(r) - r2n);
  return {lower, upper};
}

AlphaLowerBound aprop_lower_bound_detail(std::int64_t n, std::int64_t m, std::int64_t r, std::int64_t d) {
  require_int32(n, "n");
  require_int32(m, "m");
  require_int32(r, "r");
  require_int32(d, "d");
  if (m < 1) throw PreconditionError("m >= 1", "m = " + std::to_string(m));
  if (d < 1) throw PreconditionError("d >= 1", "d = " + std::to_string(d));
  if (r < 1) throw PreconditionError("0 < rho <= r", "r = " + std::to_string(r));
  if (r > n) throw PreconditionError("r <= n", std::to_string(r) + " > " + std::to_string(n));
  if (r * d * (d + 1) > 2 * r * r) {
    throw PreconditionError("r d(d+1)/2 <= r^2",
                            "r d(d+1)/2 = " + std::to_string(r * d * (d + 1) / 2) +
                                (r * d * (d + 1) % 2 ? ".5" : "") + ", r^2 = " + std::to_string(r * r));
  }
  if (r * r > d * d * n) {
    throw PreconditionError("r^2 <= d^2 n",
                            "r^2 = " + std::to_string(r * r) + ", d^2 n = " + std::to_string(d * d * n));
  }

  AlphaLowerBound out;
  out.u = ceil_div(n * m, r) - 1;
  out.rho = n * m - out.u * r;
  out.l = std::min(l_index(2 * out.rho), d) - 1;
  out.genus_term = floor_div(m * r + genus(d) - 1, d);
  out.tail_term = out.l + out.u * d;
  out.bound = 1 + std::min(out.genus_term, out.tail_term);
  return out;
}

std::int64_t aprop_lower_bound(std::int64_t n, std::int64_t m, std::int64_t r, std::int64_t d) {
  return aprop_lower_bound_detail(n, m, r, d).bound;
}

std::optional<std::int64_t> exact_sqrt(std::int64_t n) {
  if (n < 0) return std::nullopt;
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  if (s * s != n) return std::nullopt;
  return s;
}

TheoremStatus mainthm_parameters(std::int64_t n, std::int64_t m) {
  TheoremStatus status;
  const auto root = exact_sqrt(n);
  if (!root || n < 10 || m < 1) return status;
  const auto s = *root;
  status.s = s;

  const bool even = s % 2 == 0;
  const auto hi = even ? s / 2 : (s + 1) / 2;
  const auto lo = even ? hi - l_index(s) : hi - l_index(2 * s);

  for (std::int64_t k = 0;; ++k) {
    const auto x = m - k * (s - 1);
    if (x < lo) break;
    if (x <= hi) {
      status.applicable = true;
      status.x = x;
      status.k = k;
      status.predicted_alpha = even ? m * s + s / 2 - 1 : m * s + (s - 1) / 2 - 1;
      break;
    }
  }
  return status;
}

}  // namespace fatpoints
