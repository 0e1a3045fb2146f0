#include "fatpoints/tuple.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include "fatpoints/errors.hpp"

namespace fatpoints {

void require_int32(std::int64_t value, const char* name) {
  if (value < std::numeric_limits<std::int32_t>::min() ||
      value > std::numeric_limits<std::int32_t>::max()) {
    throw ParameterError(std::string(name) + " does not fit in 32 bits");
  }
}

MultiplicityTuple MultiplicityTuple::raw(std::int64_t degree, std::vector<std::int64_t> multiplicities) {
  const bool sorted = std::is_sorted(multiplicities.begin(), multiplicities.end(), std::greater<>{});
  const bool nonneg = std::all_of(multiplicities.begin(), multiplicities.end(),
                                  [](std::int64_t v) { return v >= 0; });
  // A raw tuple that happens to satisfy the canonical invariants is canonical.
  return {degree, std::move(multiplicities), sorted && nonneg ? Form::canonical : Form::raw};
}

MultiplicityTuple MultiplicityTuple::canonical(std::int64_t degree, std::vector<std::int64_t> multiplicities) {
  for (auto& v : multiplicities) v = std::max<std::int64_t>(v, 0);
  std::sort(multiplicities.begin(), multiplicities.end(), std::greater<>{});
  return {degree, std::move(multiplicities), Form::canonical};
}

MultiplicityTuple MultiplicityTuple::uniform(std::int64_t degree, std::int64_t n, std::int64_t m) {
  if (n < 1) throw ParameterError("n must be >= 1");
  if (m < 0) throw ParameterError("m must be >= 0");
  require_int32(degree, "t");
  require_int32(n, "n");
  require_int32(m, "m");
  return canonical(degree, std::vector<std::int64_t>(static_cast<std::size_t>(n), m));
}

std::int64_t MultiplicityTuple::multiplicity_sum() const noexcept {
  return std::accumulate(mults_.begin(), mults_.end(), std::int64_t{0});
}

bool MultiplicityTuple::multiplicities_zero() const noexcept {
  return std::all_of(mults_.begin(), mults_.end(), [](std::int64_t v) { return v == 0; });
}

std::string MultiplicityTuple::to_string() const {
  std::ostringstream out;
  out << '(' << degree_;
  for (std::size_t i = 0; i < mults_.size();) {
    std::size_t j = i;
    while (j < mults_.size() && mults_[j] == mults_[i]) ++j;
    out << ", " << mults_[i];
    if (j - i > 1) out << '^' << (j - i);
    i = j;
  }
  out << ')';
  return out.str();
}

ReductionCurve ReductionCurve::make(std::int64_t n, std::int64_t d, std::int64_t r) {
  require_int32(n, "n");
  require_int32(d, "d");
  require_int32(r, "r");
  if (n < 1) throw ParameterError("n must be >= 1");
  if (d < 1) throw ParameterError("d must be >= 1");
  if (r < 1 || r > n) throw ParameterError("r must satisfy 1 <= r <= n");
  return {n, d, r};
}

MultiplicityTuple ReductionCurve::expand() const {
  std::vector<std::int64_t> mults(static_cast<std::size_t>(n), 0);
  std::fill_n(mults.begin(), r, 1);
  return MultiplicityTuple::raw(d, std::move(mults));
}

std::int64_t genus(std::int64_t d) {
  if (d < 1) throw ParameterError("genus requires d >= 1");
  return (d - 1) * (d - 2) / 2;
}

namespace {

void require_same_n(const MultiplicityTuple& D, const ReductionCurve& C) {
  if (D.size() != C.n) {
    throw ParameterError("tuple has " + std::to_string(D.size()) + " multiplicities but curve has n = " +
                         std::to_string(C.n));
  }
}

}  // namespace

std::int64_t intersection_product(const MultiplicityTuple& D, const ReductionCurve& C) {
  require_same_n(D, C);
  const auto m = D.multiplicities();
  return D.degree() * C.d - std::accumulate(m.begin(), m.begin() + C.r, std::int64_t{0});
}

MultiplicityTuple reduce_step(const MultiplicityTuple& D, const ReductionCurve& C) {
  require_same_n(D, C);
  const auto src = D.multiplicities();
  std::vector<std::int64_t> mults(src.begin(), src.end());
  for (std::int64_t j = 0; j < C.r; ++j) mults[static_cast<std::size_t>(j)] -= 1;
  return MultiplicityTuple::canonical(D.degree() - C.d, std::move(mults));
}

ReductionTrace run_reduction(const MultiplicityTuple& D0, const ReductionCurve& C) {
  require_same_n(D0, C);
  if (D0.degree() < 0) throw ParameterError("starting degree must be >= 0");
  if (!D0.is_canonical()) throw ParameterError("starting tuple must be canonical");

  ReductionTrace trace;
  trace.steps.push_back(D0);
  while (true) {
    const auto& cur = trace.steps.back();
    const auto i = static_cast<std::int64_t>(trace.steps.size()) - 1;
    trace.intersections.push_back(intersection_product(cur, C));
    if (!trace.omega_prime && cur.multiplicities_zero()) trace.omega_prime = i;
    if (cur.degree() < 0) {
      trace.omega = i;
      break;
    }
    trace.steps.push_back(reduce_step(cur, C));
  }
  return trace;
}

}  // namespace fatpoints
