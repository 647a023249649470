#pragma once

#include <string>
#include <vector>

#include "bigindec/homext.hpp"

namespace bigindec {

/// 0 -> N -iota-> X -pi-> M -> 0. `verified` is set only by a passing
/// exactness check.
struct ShortExactSequence {
  ModuleMap iota;
  ModuleMap pi;
  bool verified = false;

  const GradedModule& left() const noexcept { return iota.source; }
  const GradedModule& middle() const noexcept { return iota.target; }
  const GradedModule& right() const noexcept { return pi.target; }
};

struct ExactnessReport {
  bool exact = false;
  std::string failing;  // "composition", "injective", "surjective" or "middle"
};

ExactnessReport verify_exact(const ModuleMap& iota, const ModuleMap& pi);
/// Runs verify_exact; the result carries the verdict in `verified`.
ShortExactSequence make_sequence(ModuleMap iota, ModuleMap pi);

/// A degree-zero section sigma of pi with pi o sigma = id, if one exists.
std::optional<ModuleMap> find_splitting(const ShortExactSequence& s);
bool is_split(const ShortExactSequence& s);

/// The class of the sequence: lifts the generators of M to X and reads off
/// the images of the relations in N.
ExtClass class_of(const ShortExactSequence& s);

/// X = (N + F0) / <(rel N, 0), (c(z), -z)> for the relation columns z of M.
/// The class must have internal degree 0.
ShortExactSequence pushout_extension(const ExtClass& c);
/// Cobase change along g : N -> N' (degree 0).
ShortExactSequence pushout_along(const ShortExactSequence& s, const ModuleMap& g);
/// Base change along f : M' -> M; the middle module is ker(pi, -f). A map of
/// nonzero degree d is treated as a degree-zero map out of M'(-d).
ShortExactSequence pullback(const ShortExactSequence& s, const ModuleMap& f);

/// (alpha iota_1, ..., alpha iota_n) for a class over a recorded direct sum.
std::vector<ExtClass> phi_split(const ExtClass& alpha, const DirectSum& ds);
/// Inverse of phi_split by concatenating cocycles blockwise.
ExtClass phi_inverse(const std::vector<ExtClass>& parts, const DirectSum& ds);
/// Inverse of phi_split through the literal construction: the direct sum of
/// the extensions pushed out along the codiagonal N^n -> N.
ShortExactSequence phi_inverse_sequence(const std::vector<ExtClass>& parts, const DirectSum& ds);

/// C_ij = pi_i o b o iota_j, so that phi(alpha b) = phi(alpha) C.
std::vector<std::vector<ModuleMap>> psi_matrix(const ModuleMap& b, const DirectSum& ds);
/// Row tuple times matrix: component j is sum_i t_i . C_ij.
std::vector<ExtClass> row_times_matrix(const std::vector<ExtClass>& t, const std::vector<std::vector<ModuleMap>>& c);

/// The tautological class 0 -> Omega^1(M) -> F0 -> M -> 0 over the given presentation.
ExtClass syzygy_class(const GradedModule& m);

}  // namespace bigindec
