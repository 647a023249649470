#include "bigindec/field.hpp"

namespace bigindec {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  require(p < (1u << 31), ErrorKind::Input, "characteristic must be below 2^31");
  require(is_prime(p), ErrorKind::Input, "characteristic " + std::to_string(p) + " is not prime");
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const noexcept {
  Coeff result = 1 % p_;
  Coeff base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Coeff PrimeField::inv(Coeff a) const {
  require(a != 0, ErrorKind::Internal, "division by zero in F_p");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
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

}  // namespace bigindec
