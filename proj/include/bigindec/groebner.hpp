#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bigindec/field.hpp"
#include "bigindec/polynomial.hpp"

namespace bigindec {

/// Everything the Gröbner engine needs to know about the coefficient ring
/// S/I: field, variable weights and the reduced Gröbner basis of I.
struct GBContext {
  PrimeField field;
  std::vector<int> weights;
  std::vector<Polynomial> ring_gb;
};

/// Input to the homogeneous module Buchberger algorithm. Generators live in
/// the graded free module with basis degrees `component_degrees`. Counted
/// generators are tracked (representations, syzygies, minimality); uncounted
/// generators only enlarge the submodule. Relations f*e_i for f in the ring's
/// Gröbner basis are added automatically when `ring_relations` is set.
struct ModuleGBInput {
  std::vector<std::int32_t> component_degrees;
  std::vector<ModVec> counted;
  std::vector<std::int32_t> counted_degrees;
  std::vector<ModVec> uncounted;
  bool track = false;
  bool syzygies = false;
  bool ring_relations = true;
};

/// Reduced Gröbner basis of a graded submodule of a free module over S/I.
///
/// Computed degree by degree (S-pairs of a degree before input generators of
/// that degree, uncounted inputs before counted ones, ties by index), so the
/// result and every derived quantity is deterministic. A counted generator is
/// flagged minimal iff it is not in the span of everything processed before
/// it, which makes the flagged set a minimal generating system modulo the
/// uncounted part.
class ModuleGB {
 public:
  ModuleGB() = default;
  ModuleGB(const GBContext& ctx, ModuleGBInput input);

  std::size_t rank() const noexcept { return component_degrees_.size(); }
  const std::vector<std::int32_t>& component_degrees() const noexcept { return component_degrees_; }
  const std::vector<ModVec>& basis() const noexcept { return basis_; }
  /// Representation of each basis element in counted-generator coordinates.
  const std::vector<ModVec>& representations() const noexcept { return reps_; }
  const std::vector<char>& minimal() const noexcept { return minimal_; }
  /// Syzygies of the counted generators modulo the uncounted ones (not minimal).
  const std::vector<ModVec>& syzygies() const noexcept { return syzygies_; }
  bool tracked() const noexcept { return track_; }

  ModVec normal_form(const ModVec& v) const;
  bool contains(const ModVec& v) const { return normal_form(v).is_zero(); }
  /// Coefficients c (in counted coordinates) with v = sum c_j g_j modulo the
  /// uncounted generators, or nullopt if v is not in the submodule.
  std::optional<ModVec> lift(const ModVec& v) const;

  /// Leading terms of the basis, for standard-monomial enumeration.
  const std::vector<VecTerm>& leads() const noexcept { return leads_; }
  /// True iff a basis lead divides the module monomial (mon, comp).
  bool is_leading(const Monomial& mon, std::uint32_t comp) const noexcept;

 private:
  // Reduces v (and rep alongside if tracking) completely.
  ModVec reduce(ModVec v, ModVec* rep) const;
  int find_divisor(const VecTerm& t) const noexcept;

  PrimeField field_;
  std::vector<std::int32_t> component_degrees_;
  std::vector<std::int32_t> counted_degrees_;
  std::vector<ModVec> basis_;
  std::vector<ModVec> reps_;
  std::vector<VecTerm> leads_;
  std::vector<std::vector<std::uint32_t>> by_comp_;
  std::vector<char> minimal_;
  std::vector<ModVec> syzygies_;
  bool track_ = false;
};

/// Normal form of a polynomial modulo a Gröbner basis of polynomials.
Polynomial reduce_polynomial(const Polynomial& f, const std::vector<Polynomial>& gb,
                             const PrimeField& field);

}  // namespace bigindec
