#pragma once

#include <cstdint>
#include <vector>

#include "bigindec/field.hpp"
#include "bigindec/monomial.hpp"

namespace bigindec {

struct PolyTerm {
  Monomial mon;
  Coeff coeff;
  bool operator==(const PolyTerm& o) const noexcept { return mon == o.mon && coeff == o.coeff; }
};

/// Sparse polynomial; terms strictly descending in the monomial order, no
/// zero coefficients. The empty term list is the zero polynomial.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<PolyTerm> sorted_terms) : terms_(std::move(sorted_terms)) {}

  static Polynomial constant(Coeff c) {
    return c == 0 ? Polynomial{} : Polynomial{{PolyTerm{Monomial{}, c}}};
  }
  static Polynomial monomial(const Monomial& m, Coeff c = 1) {
    return c == 0 ? Polynomial{} : Polynomial{{PolyTerm{m, c}}};
  }
  /// Builds from unsorted terms, combining duplicates.
  static Polynomial from_terms(std::vector<PolyTerm> terms, const PrimeField& f);

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<PolyTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  const PolyTerm& lead() const noexcept { return terms_.front(); }
  /// Weighted degree of the leading term (0 for the zero polynomial).
  std::int32_t degree() const noexcept { return terms_.empty() ? 0 : terms_.front().mon.degree; }
  bool is_homogeneous() const noexcept;
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one()); }
  Coeff constant_term() const noexcept;

  bool operator==(const Polynomial& o) const noexcept { return terms_ == o.terms_; }

 private:
  std::vector<PolyTerm> terms_;
};

Polynomial add(const Polynomial& a, const Polynomial& b, const PrimeField& f);
Polynomial sub(const Polynomial& a, const Polynomial& b, const PrimeField& f);
Polynomial scale(const Polynomial& a, Coeff c, const PrimeField& f);
Polynomial mul_term(const Polynomial& a, const Monomial& m, Coeff c, const PrimeField& f);
/// Product in the polynomial ring (no reduction modulo any ideal).
Polynomial mul(const Polynomial& a, const Polynomial& b, const PrimeField& f);

struct VecTerm {
  Monomial mon;
  std::uint32_t comp;
  std::int32_t tdeg;  // mon.degree + degree of the component's basis vector
  Coeff coeff;
  bool operator==(const VecTerm& o) const noexcept {
    return mon == o.mon && comp == o.comp && coeff == o.coeff;
  }
};

/// Module monomial order: term degree, then monomial (weighted degrevlex),
/// then lower component index first.
inline int compare_terms(const VecTerm& a, const VecTerm& b) noexcept {
  if (a.tdeg != b.tdeg) return a.tdeg > b.tdeg ? 1 : -1;
  int c = compare_monomials(a.mon, b.mon);
  if (c != 0) return c;
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return 0;
}

/// Sparse element of a graded free module, terms strictly descending.
class ModVec {
 public:
  ModVec() = default;
  explicit ModVec(std::vector<VecTerm> sorted_terms) : terms_(std::move(sorted_terms)) {}

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<VecTerm>& terms() const noexcept { return terms_; }
  std::vector<VecTerm>& mutable_terms() noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  const VecTerm& lead() const noexcept { return terms_.front(); }
  std::int32_t degree() const noexcept { return terms_.empty() ? 0 : terms_.front().tdeg; }

  bool operator==(const ModVec& o) const noexcept { return terms_ == o.terms_; }

 private:
  std::vector<VecTerm> terms_;
};

/// The polynomial p placed in component `comp` whose basis vector has degree `shift`.
ModVec embed(const Polynomial& p, std::uint32_t comp, std::int32_t shift);
/// Builds from unsorted terms, combining duplicates.
ModVec vec_from_terms(std::vector<VecTerm> terms, const PrimeField& f);
ModVec add(const ModVec& a, const ModVec& b, const PrimeField& f);
ModVec scale(const ModVec& a, Coeff c, const PrimeField& f);
/// a - c * m * b.
ModVec sub_mul(const ModVec& a, Coeff c, const Monomial& m, const ModVec& b, const PrimeField& f);
ModVec mul_term(const ModVec& a, const Monomial& m, Coeff c, const PrimeField& f);
/// Extracts the polynomial in component `comp`.
Polynomial component(const ModVec& v, std::uint32_t comp);

}  // namespace bigindec
