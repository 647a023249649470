#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace bigindec {

inline constexpr int kMaxVars = 8;
inline constexpr int kMaxExponent = 127;

/// A monomial in at most eight variables: exponents packed one byte per
/// variable (variable i in byte i), plus its cached weighted degree.
struct Monomial {
  std::uint64_t exps = 0;
  std::int32_t degree = 0;

  int exponent(int var) const noexcept { return static_cast<int>((exps >> (8 * var)) & 0xff); }
  int standard_degree() const noexcept {
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) d += exponent(i);
    return d;
  }
  bool is_one() const noexcept { return exps == 0; }

  /// true iff this divides other.
  bool divides(const Monomial& other) const noexcept {
    constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
    return (((other.exps | kHigh) - exps) & kHigh) == kHigh;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) noexcept {
    return {a.exps + b.exps, a.degree + b.degree};
  }
  /// Quotient a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) noexcept {
    return {a.exps - b.exps, a.degree - b.degree};
  }
  bool operator==(const Monomial& o) const noexcept { return exps == o.exps; }
};

/// Weighted degree-reverse-lexicographic comparison: +1 if a > b.
inline int compare_monomials(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
  std::uint64_t x = a.exps ^ b.exps;
  if (x == 0) return 0;
  int byte = (63 - std::countl_zero(x)) / 8;
  int ea = a.exponent(byte), eb = b.exponent(byte);
  return ea < eb ? 1 : -1;
}

inline std::int32_t weighted_degree(std::uint64_t exps, std::span<const int> weights) noexcept {
  std::int32_t d = 0;
  for (std::size_t i = 0; i < weights.size(); ++i)
    d += static_cast<std::int32_t>((exps >> (8 * i)) & 0xff) * weights[i];
  return d;
}

inline Monomial lcm(const Monomial& a, const Monomial& b, std::span<const int> weights) noexcept {
  std::uint64_t r = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    std::uint64_t ea = (a.exps >> (8 * i)) & 0xff, eb = (b.exps >> (8 * i)) & 0xff;
    r |= (ea > eb ? ea : eb) << (8 * i);
  }
  return {r, weighted_degree(r, weights)};
}

}  // namespace bigindec
