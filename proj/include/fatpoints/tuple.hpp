#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fatpoints {

// A degree together with n point multiplicities: (t, m_1, ..., m_n).
//
// Raw tuples come straight out of a subtraction and may hold negative or
// unsorted multiplicities. Canonical tuples have multiplicities sorted in
// descending order and all >= 0; the degree entry is never touched by
// canonicalization.
class MultiplicityTuple {
 public:
  enum class Form { raw, canonical };

  MultiplicityTuple() = default;

  // Builds a raw tuple as given.
  static MultiplicityTuple raw(std::int64_t degree, std::vector<std::int64_t> multiplicities);

  // Clamps negative multiplicities to 0 and sorts descending.
  static MultiplicityTuple canonical(std::int64_t degree, std::vector<std::int64_t> multiplicities);

  // (t, m, m, ..., m) with n copies of m.
  static MultiplicityTuple uniform(std::int64_t degree, std::int64_t n, std::int64_t m);

  std::int64_t degree() const noexcept { return degree_; }
  std::span<const std::int64_t> multiplicities() const noexcept { return mults_; }
  std::int64_t size() const noexcept { return static_cast<std::int64_t>(mults_.size()); }
  Form form() const noexcept { return form_; }
  bool is_canonical() const noexcept { return form_ == Form::canonical; }

  std::int64_t multiplicity_sum() const noexcept;
  bool multiplicities_zero() const noexcept;

  // Compact rendering with run-length exponents, e.g. "(5, 2^4, 1^12)".
  std::string to_string() const;

  friend bool operator==(const MultiplicityTuple& a, const MultiplicityTuple& b) {
    return a.degree_ == b.degree_ && a.mults_ == b.mults_;
  }

 private:
  MultiplicityTuple(std::int64_t degree, std::vector<std::int64_t> mults, Form form)
      : degree_(degree), mults_(std::move(mults)), form_(form) {}

  std::int64_t degree_ = 0;
  std::vector<std::int64_t> mults_;
  Form form_ = Form::canonical;
};

// The tuple (d, 1 x r, 0 x (n - r)), a degree-d curve through r of the points.
struct ReductionCurve {
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::int64_t r = 0;

  // Throws ParameterError unless d >= 1 and 1 <= r <= n.
  static ReductionCurve make(std::int64_t n, std::int64_t d, std::int64_t r);

  MultiplicityTuple expand() const;
};

struct ReductionTrace {
  std::vector<MultiplicityTuple> steps;   // D_0 .. D_omega, canonical
  std::vector<std::int64_t> intersections;  // D_i . C for each recorded step
  std::int64_t omega = 0;                    // least i with negative degree
  std::optional<std::int64_t> omega_prime;   // least i with all-zero multiplicities, if <= omega
};

// Rejects values outside the signed 32-bit range so that every product in the
// certifier fits comfortably in 64 bits.
void require_int32(std::int64_t value, const char* name);

// (d - 1)(d - 2) / 2
std::int64_t genus(std::int64_t d);

// t*d - (m_1 + ... + m_r). Positional: callers pass canonical tuples so the
// first r entries are the r largest.
std::int64_t intersection_product(const MultiplicityTuple& D, const ReductionCurve& C);

// D - C, negative multiplicities clamped to zero, multiplicities sorted descending.
MultiplicityTuple reduce_step(const MultiplicityTuple& D, const ReductionCurve& C);

// Iterates reduce_step from D0 until the degree goes negative.
ReductionTrace run_reduction(const MultiplicityTuple& D0, const ReductionCurve& C);

}  // namespace fatpoints
