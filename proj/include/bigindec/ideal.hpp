#pragma once

#include <optional>
#include <vector>

#include "bigindec/groebner.hpp"
#include "bigindec/poly_matrix.hpp"
#include "bigindec/ring.hpp"

namespace bigindec {

/// Homogeneous ideal of R with its reduced Gröbner basis (computed over S,
/// together with the defining ideal of R).
class IdealHandle {
 public:
  IdealHandle(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  /// Reduced Gröbner basis elements that are nonzero in R.
  const std::vector<Polynomial>& groebner_basis() const noexcept { return gb_polys_; }
  /// Leading monomials of the full basis of I + (defining ideal).
  std::vector<Monomial> leading_monomials() const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool contains(const IdealHandle& other) const;
  bool equals(const IdealHandle& other) const { return contains(other) && other.contains(*this); }
  bool is_unit() const;
  bool is_zero() const { return gb_polys_.empty(); }

  /// dim_k R/I when finite.
  std::optional<long> colength() const;
  /// Krull dimension of R/I (-1 for the unit ideal).
  int quotient_dimension() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::vector<Polynomial> gb_polys_;
  ModuleGB gb_;
};

IdealHandle buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens);
Polynomial normal_form(const RingPtr& ring, const Polynomial& f, const IdealHandle& g);

IdealHandle maximal_ideal(const RingPtr& ring);
/// m^n generated by all monomials of standard degree n (reduced modulo I).
IdealHandle power_of_maximal(const RingPtr& ring, int n);
IdealHandle product(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b);

/// I : J.
IdealHandle quotient(const IdealHandle& i, const IdealHandle& j);
/// I : J^infinity.
IdealHandle saturation(const IdealHandle& i, const IdealHandle& j);
/// I proper and (I : m^inf) = (1).
bool is_m_primary(const IdealHandle& i);
int krull_dimension(const GradedRing& ring);

/// Generators of the full syzygy module of the columns of m over R, minimal.
/// Columns of the result are coefficient vectors c with m c = 0 in R.
PolyMatrix syzygies(const GradedRing& ring, const PolyMatrix& m);

/// Syzygies of `counted` modulo the submodule spanned by `uncounted`
/// (relations sum c_j v_j in span(uncounted)), minimalized.
PolyMatrix relative_syzygies(const GradedRing& ring, const std::vector<std::int32_t>& ambient_degrees,
                             const PolyMatrix& counted, const PolyMatrix& uncounted);

/// Indices of a minimal generating subset of the columns of `counted`
/// modulo `uncounted` (deterministic: greedy by degree, then column index).
std::vector<std::size_t> minimal_columns(const GradedRing& ring, const PolyMatrix& counted,
                                         const PolyMatrix& uncounted);

/// Tracked Gröbner basis of the columns of `counted` plus `uncounted`.
ModuleGB tracked_gb(const GradedRing& ring, const PolyMatrix& counted, const PolyMatrix& uncounted,
                    bool syzygies = false);

/// Gröbner basis (untracked) of the submodule spanned by the columns.
ModuleGB submodule_gb(const GradedRing& ring, const std::vector<std::int32_t>& ambient_degrees,
                      const PolyMatrix& gens);

}  // namespace bigindec
