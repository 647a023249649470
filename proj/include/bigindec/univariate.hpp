#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bigindec/field.hpp"

namespace bigindec {

/// Dense univariate polynomial over F_p, coefficients from degree 0 up.
/// The zero polynomial is the empty vector.
using UPoly = std::vector<Coeff>;

void trim(UPoly& a);
int degree(const UPoly& a);  // -1 for zero
UPoly upoly_mul(const UPoly& a, const UPoly& b, const PrimeField& f);
UPoly upoly_sub(const UPoly& a, const UPoly& b, const PrimeField& f);
UPoly upoly_mod(UPoly a, const UPoly& m, const PrimeField& f);
UPoly upoly_monic(UPoly a, const PrimeField& f);
UPoly upoly_gcd(UPoly a, UPoly b, const PrimeField& f);
UPoly upoly_powmod(const UPoly& base, std::uint64_t e, const UPoly& m, const PrimeField& f);
Coeff upoly_eval(const UPoly& a, Coeff x, const PrimeField& f);

/// Roots of a squarefree polynomial that splits into distinct linear
/// factors, in increasing order (equal-degree splitting with a seeded RNG).
std::vector<Coeff> split_roots(const UPoly& a, const PrimeField& f, std::mt19937_64& rng);

}  // namespace bigindec
