#include "nll/field.hpp"

#include <string>

#include "nll/errors.hpp"

namespace nll {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31))
    throw InvalidInput("prime must be below 2^31, got " + std::to_string(p));
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
}

Fp PrimeField::pow(Fp a, std::uint64_t e) const {
  Fp result{1 % p_};
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Fp PrimeField::inv(Fp a) const {
  if (a.is_zero()) throw InvalidInput("division by zero in F_p");
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a.value;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return from_int(t);
}

}  // namespace nll
