#include "fatpoints/prime_field.hpp"

#include <string>

#include "fatpoints/errors.hpp"

namespace fatpoints {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t f = 3; f * f <= p; f += 2) {
    if (p % f == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw ParameterError("modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  barrett_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / p);
}

std::uint32_t PrimeField::pow(std::uint32_t base, std::uint64_t exp) const noexcept {
  std::uint32_t result = 1 % p_;
  std::uint32_t b = base % p_;
  while (exp > 0) {
    if (exp & 1) result = mul(result, b);
    b = mul(b, b);
    exp >>= 1;
  }
  return result;
}

}  // namespace fatpoints
