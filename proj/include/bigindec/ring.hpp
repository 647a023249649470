#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "bigindec/groebner.hpp"
#include "bigindec/polynomial.hpp"

namespace bigindec {

/// R = F_p[x_1..x_v]/I with positive integer weights, weighted
/// degree-reverse-lexicographic order and a cached reduced Gröbner basis of I.
/// Immutable after construction; shared through RingPtr.
class GradedRing {
 public:
  static std::shared_ptr<const GradedRing> create(std::string name, std::uint32_t characteristic,
                                                  std::vector<std::string> variables,
                                                  std::vector<int> weights,
                                                  std::vector<Polynomial> ideal);

  const std::string& name() const noexcept { return name_; }
  const PrimeField& field() const noexcept { return ctx_.field; }
  const GBContext& context() const noexcept { return ctx_; }
  int num_vars() const noexcept { return static_cast<int>(variables_.size()); }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::vector<int>& weights() const noexcept { return ctx_.weights; }
  const std::vector<Polynomial>& defining_ideal() const noexcept { return ideal_; }
  const std::vector<Polynomial>& groebner_basis() const noexcept { return ctx_.ring_gb; }
  /// Krull dimension, 1 + degree of the Hilbert polynomial of R.
  int krull_dim() const noexcept { return krull_dim_; }

  Monomial make_monomial(std::span<const int> exponents) const;
  Monomial variable(int i) const;
  Polynomial var(int i) const { return Polynomial::monomial(variable(i)); }
  Polynomial constant(std::int64_t c) const { return Polynomial::constant(field().from_int(c)); }

  /// Normal form modulo I.
  Polynomial reduce(const Polynomial& f) const;
  Polynomial multiply(const Polynomial& a, const Polynomial& b) const;
  Polynomial add(const Polynomial& a, const Polynomial& b) const { return bigindec::add(a, b, field()); }
  Polynomial sub(const Polynomial& a, const Polynomial& b) const { return bigindec::sub(a, b, field()); }
  Polynomial scale(const Polynomial& a, Coeff c) const { return bigindec::scale(a, c, field()); }

  /// Monomials of weighted degree d that are standard (not in the lead ideal of I).
  std::vector<Monomial> standard_monomials(int degree) const;
  /// All monomials of standard (unweighted) degree d.
  std::vector<Monomial> monomials_of_standard_degree(int d) const;
  /// All monomials of weighted degree d.
  std::vector<Monomial> monomials_of_degree(int d) const;

  /// Canonical text form, e.g. "x^2*y - 3*z".
  std::string to_string(const Polynomial& f) const;
  std::string to_string(const Monomial& m) const;

  bool same_as(const GradedRing& o) const noexcept { return this == &o; }

 private:
  GradedRing() = default;

  std::string name_;
  std::vector<std::string> variables_;
  std::vector<Polynomial> ideal_;
  GBContext ctx_;
  int krull_dim_ = 0;
};

using RingPtr = std::shared_ptr<const GradedRing>;

/// Krull dimension of S/(monomial ideal): the largest set of variables not
/// containing the support of any generator.
int monomial_ideal_dimension(const std::vector<Monomial>& gens, int num_vars);

}  // namespace bigindec
