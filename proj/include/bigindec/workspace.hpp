#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bigindec/module.hpp"

namespace bigindec {

struct WorkspaceConfig {
  int n_max = 12;
  std::uint64_t seed = 20240611;
  bool n_max_set = false;
  bool seed_set = false;
};

struct ModuleDecl {
  std::string name;
  std::string ring;
  GradedModule module;
};

struct PrimeDecl {
  std::string name;
  std::string ring;
  std::vector<Polynomial> generators;
};

/// A parsed input file. Declaration order is preserved for printing.
struct WorkspaceSpec {
  std::vector<RingPtr> rings;
  std::vector<ModuleDecl> modules;
  std::vector<PrimeDecl> primes;
  WorkspaceConfig config;

  RingPtr ring(std::string_view name) const;
  const ModuleDecl& module(std::string_view name) const;
  /// Witness primes declared over the given ring, as ideals.
  std::vector<std::pair<std::string, IdealHandle>> primes_over(const RingPtr& ring) const;
};

/// Parses the workspace grammar. `prime_override` replaces every declared
/// characteristic. Errors are ErrorKind::Input with "line L, column C".
WorkspaceSpec parse_spec(std::string_view text, std::optional<std::uint32_t> prime_override = std::nullopt);
std::string print_spec(const WorkspaceSpec& spec);

/// Polynomial over the ring from text, e.g. "x*y - z^2".
Polynomial parse_polynomial(const GradedRing& ring, std::string_view text);
/// Columns given as VECPOLY text ("x*e1 + z*e2"), generator degrees given.
PolyMatrix parse_relations(const GradedRing& ring, const std::vector<std::int32_t>& degrees,
                           const std::vector<std::string>& columns);
/// Module from generator degrees and relation columns in VECPOLY text.
GradedModule parse_module(const RingPtr& ring, const std::vector<std::int32_t>& degrees,
                          const std::vector<std::string>& columns);

std::string format_column(const GradedRing& ring, const PolyMatrix& m, std::size_t j);

}  // namespace bigindec
