#pragma once

#include <cstdint>

namespace fatpoints {

// Deterministic trial division; fine for moduli below 2^31.
bool is_prime(std::uint64_t p);

// Arithmetic modulo a prime p < 2^31 with Barrett reduction of 64-bit
// products (one 128-bit multiply-high instead of a hardware divide).
class PrimeField {
 public:
  // Throws ParameterError unless p is a prime in [2, 2^31).
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  std::uint32_t reduce(std::uint64_t x) const noexcept {
    const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett_) >> 64);
    auto r = x - q * p_;
    if (r >= p_) r -= p_;
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return reduce(static_cast<std::uint64_t>(a) * b);
  }
  std::uint32_t pow(std::uint32_t base, std::uint64_t exp) const noexcept;
  // Requires a != 0.
  std::uint32_t inv(std::uint32_t a) const noexcept { return pow(a, p_ - 2); }

  // Embeds a nonnegative integer.
  std::uint32_t from(std::uint64_t v) const noexcept { return reduce(v % p_); }

 private:
  std::uint32_t p_;
  std::uint64_t barrett_;  // floor(2^64 / p)
};

}  // namespace fatpoints
