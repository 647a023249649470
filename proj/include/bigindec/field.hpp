#pragma once

#include <cstdint>
#include <string>

#include "bigindec/error.hpp"

namespace bigindec {

using Coeff = std::uint32_t;

inline constexpr std::uint32_t kDefaultPrime = 32003;

bool is_prime(std::uint64_t n);

/// Arithmetic in the prime field F_p. Elements are residues in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t characteristic() const noexcept { return p_; }

  Coeff add(Coeff a, Coeff b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Coeff inv(Coeff a) const;
  Coeff pow(Coeff a, std::uint64_t e) const noexcept;

  /// Reduces an arbitrary signed integer into [0, p).
  Coeff from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  /// Symmetric representative in (-p/2, p/2], used for printing.
  std::int64_t to_signed(Coeff a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace bigindec
