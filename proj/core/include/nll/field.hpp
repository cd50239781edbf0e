#pragma once

#include <compare>
#include <cstdint>
#include <random>

namespace nll {

// Residue class modulo the prime of the owning PrimeField. Carries no
// modulus of its own; all arithmetic goes through a PrimeField.
struct Fp {
  std::uint32_t value = 0;

  constexpr bool is_zero() const { return value == 0; }
  friend constexpr auto operator<=>(Fp, Fp) = default;
};

// Z/pZ for a prime p < 2^31. Small value type, passed and stored by value.
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultPrime = 65521;

  PrimeField() : PrimeField(kDefaultPrime) {}
  explicit PrimeField(std::uint32_t p);

  std::uint32_t prime() const { return p_; }

  Fp from_int(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Fp{static_cast<std::uint32_t>(r)};
  }

  // Symmetric representative in (-p/2, p/2], used for printing.
  std::int64_t to_signed(Fp a) const {
    return a.value > p_ / 2 ? static_cast<std::int64_t>(a.value) - p_
                            : static_cast<std::int64_t>(a.value);
  }

  Fp add(Fp a, Fp b) const {
    std::uint32_t s = a.value + b.value;
    return Fp{s >= p_ ? s - p_ : s};
  }
  Fp sub(Fp a, Fp b) const {
    return Fp{a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
  }
  Fp neg(Fp a) const { return Fp{a.value == 0 ? 0 : p_ - a.value}; }
  Fp mul(Fp a, Fp b) const {
    return Fp{static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(a.value) * b.value % p_)};
  }
  // a + b*c
  Fp mul_add(Fp a, Fp b, Fp c) const { return add(a, mul(b, c)); }

  Fp pow(Fp a, std::uint64_t e) const;
  // Throws InvalidInput on zero.
  Fp inv(Fp a) const;
  Fp div(Fp a, Fp b) const { return mul(a, inv(b)); }

  // Uniform draw in [0, p). Uses only the raw engine output so that the
  // stream is identical across standard libraries.
  Fp random(std::mt19937_64& rng) const {
    return Fp{static_cast<std::uint32_t>(rng() % p_)};
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace nll
