#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bigindec/homext.hpp"
#include "bigindec/linalg.hpp"
#include "bigindec/univariate.hpp"

namespace bigindec {

using Vec = std::vector<Coeff>;

/// Finite-dimensional associative unital k-algebra given by structure
/// constants: b_i * b_j = sum_k c(i, j, k) b_k.
class FinDimAlgebra {
 public:
  FinDimAlgebra() = default;
  /// `table[i][j]` holds the coordinates of b_i * b_j. Validation checks the
  /// unit law and associativity (all triples up to dimension 24, a seeded
  /// sample of 4096 triples above).
  FinDimAlgebra(PrimeField f, std::vector<std::vector<Vec>> table, Vec unit, bool validate = true);

  std::size_t dim() const noexcept { return dim_; }
  const PrimeField& field() const noexcept { return field_; }
  const Vec& unit() const noexcept { return unit_; }
  Coeff constant(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    return table_[(i * dim_ + j) * dim_ + k];
  }
  Vec multiply(const Vec& x, const Vec& y) const;
  Vec basis_vector(std::size_t i) const;
  bool is_commutative() const;
  bool is_associative(std::size_t sample_limit = 4096) const;
  /// Matrix of y -> x * y (columns indexed by the basis).
  DenseMatrix left_multiplication(const Vec& x) const;

 private:
  PrimeField field_;
  std::size_t dim_ = 0;
  std::vector<Coeff> table_;
  Vec unit_;
};

/// M_r(A) with basis E_ij (x) a_k at index (i * r + j) * dim A + k.
FinDimAlgebra matrix_algebra(const FinDimAlgebra& a, std::size_t r);
std::size_t matrix_index(std::size_t i, std::size_t j, std::size_t k, std::size_t r, std::size_t dim);

/// A / I for a two-sided ideal with the given spanning vectors. The quotient
/// basis is the set of non-pivot coordinates of the reduced ideal basis.
struct QuotientAlgebra {
  FinDimAlgebra algebra;
  SubspaceBasis ideal;
  std::vector<std::size_t> complement;  // coordinates of A kept in the quotient
  Vec project(const Vec& x) const;
  Vec lift(const Vec& q) const;
};

QuotientAlgebra quotient_algebra(const FinDimAlgebra& a, const std::vector<Vec>& ideal);

/// Right module: v . b_k = action[k] * v.
struct FinDimModule {
  std::size_t dim = 0;
  std::vector<DenseMatrix> action;
  Vec act(const Vec& v, const Vec& element, const PrimeField& f) const;
  bool is_module_over(const FinDimAlgebra& a) const;
};

/// Jacobson radical from the trace form tr(L_x L_y), valid when p > dim A.
/// The result is verified to be a nilpotent two-sided ideal.
std::vector<Vec> radical(const FinDimAlgebra& a);
bool in_span(const std::vector<Vec>& basis, const Vec& v, const PrimeField& f);

struct LocalityVerdict {
  bool local = false;
  std::size_t residue_dim = 0;  // dim A/J(A)
  std::size_t radical_dim = 0;
  std::optional<Vec> idempotent;  // set when not local
};

/// Local iff A/J(A) is a field (commutative with a one-dimensional
/// Frobenius-fixed space); otherwise a nontrivial idempotent of A, split off
/// in A/J(A) and lifted along J(A) by e -> 3e^2 - 2e^3.
LocalityVerdict locality_and_idempotents(const FinDimAlgebra& a, std::uint64_t seed = 1);

/// Minimal polynomial of x (monic).
UPoly minimal_polynomial(const FinDimAlgebra& a, const Vec& x);

struct GeneratorSelection {
  std::size_t nu = 0;            // dim_D V / VJ
  std::size_t top_dim = 0;       // dim_k V / VJ
  std::vector<std::size_t> chosen;  // indices into the candidate list
};

/// Greedy minimal generators of V over a local algebra, scanning `candidates`
/// (the basis of V when empty) in order.
GeneratorSelection minimal_generators_over(const FinDimAlgebra& a, const FinDimModule& v,
                                           const std::vector<Vec>& candidates = {});

/// Every element lies in J(A).
bool jacobson_containment(const FinDimAlgebra& a, const std::vector<Vec>& elements);

struct RowAnnihilator {
  std::size_t kernel_dim = 0;
  std::size_t radical_dim = 0;
  bool contained = false;
};

/// The kernel of rho : M_r(A) -> V^r, gamma -> (g_1 .. g_r) gamma, and
/// whether it lies in J(M_r(A)).
RowAnnihilator row_annihilator(const FinDimAlgebra& a, const FinDimModule& v, const std::vector<Vec>& gens);

/// End(M) / m^s End(M) with the endomorphism behind every basis element.
struct ReducedEnd {
  FinDimAlgebra algebra;
  GradedModule module;  // End(M) / m^s End(M) as a graded module
  std::vector<std::pair<Monomial, std::uint32_t>> basis;
  std::vector<ModuleMap> maps;
  int exponent = 1;
};

ReducedEnd reduce_mod_m(const EndAlgebra& b, int exponent);

/// Ext^1(M, N) (N of finite length) as a right module over a reduced End(M).
FinDimModule ext_as_module(const ExtSpace& space, const ReducedEnd& e);

/// Degree-zero endomorphisms End_0(M) as an algebra over k.
struct End0 {
  HomDegree0 hom;
  FinDimAlgebra algebra;
};

End0 degree_zero_endomorphisms(const GradedModule& m);

}  // namespace bigindec
