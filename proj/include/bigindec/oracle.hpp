#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bigindec/module.hpp"
#include "bigindec/yoneda.hpp"

namespace bigindec {

/// Independent checks by dense linear algebra on graded pieces. Modules are
/// modelled as S-monomial coordinates modulo the span of monomial multiples
/// of their relations and of the defining ideal; no Gröbner bases are used.

/// dim_k Ext^1(M, R/m^n) as the cokernel of Hom(F0, T) -> Hom(Omega^1, T).
long oracle_ext_dim(const GradedModule& m, int n);

/// dim_k Hom(M, N)_0.
long oracle_hom0_dim(const GradedModule& m, const GradedModule& n);

struct SplitVerdict {
  bool found = false;
  std::optional<PolyMatrix> section;  // images of the generators of M in X
};

/// Exhaustive search for a degree-zero section of pi.
SplitVerdict oracle_split_search(const ShortExactSequence& s);

struct IdempotentVerdict {
  bool found = false;
  int trials = 0;
  int trial_found = -1;
  std::optional<PolyMatrix> idempotent;  // verified e o e = e, e != 0, 1
};

/// Random degree-zero endomorphisms, split by their minimal polynomials.
IdempotentVerdict oracle_random_idempotent(const GradedModule& m, int trials, std::uint64_t seed);

}  // namespace bigindec
