#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bigindec/ideal.hpp"

namespace bigindec {

namespace detail {
struct ModuleCache;
}

/// Finitely presented graded module F1 -> F0 -> M -> 0. Elements are ModVecs
/// in F0 coordinates (component i = generator i, term degree includes the
/// generator degree).
class GradedModule {
 public:
  GradedModule();
  GradedModule(RingPtr ring, std::vector<std::int32_t> generator_degrees, PolyMatrix relations,
               bool minimal = false);
  static GradedModule free(RingPtr ring, std::vector<std::int32_t> degrees);

  const RingPtr& ring() const noexcept { return ring_; }
  const GradedRing& r() const noexcept { return *ring_; }
  const std::vector<std::int32_t>& degrees() const noexcept { return degrees_; }
  std::size_t num_generators() const noexcept { return degrees_.size(); }
  const PolyMatrix& relations() const noexcept { return relations_; }
  bool is_minimal() const noexcept { return minimal_; }

  /// Gröbner basis of the relation submodule of F0 (computed once).
  const ModuleGB& relation_gb() const;
  /// Tracked Gröbner basis of the relation columns, for lifting through F1 -> F0.
  const ModuleGB& relation_lifter() const;
  /// Minimal generators of the syzygies of the relation columns (F2 -> F1).
  const PolyMatrix& relation_syzygies() const;
  ModVec normal_form(const ModVec& v) const { return relation_gb().normal_form(v); }
  bool is_zero_element(const ModVec& v) const { return relation_gb().contains(v); }
  bool is_zero() const;
  ModVec generator(std::size_t i) const;
  /// Same module with all degrees shifted by d, i.e. M(-d).
  GradedModule shifted(std::int32_t d) const;

 private:
  RingPtr ring_;
  std::vector<std::int32_t> degrees_;
  PolyMatrix relations_;
  bool minimal_ = false;
  std::shared_ptr<detail::ModuleCache> cache_;
};

/// Homogeneous map of degree `shift`: column j is the image of generator j.
struct ModuleMap {
  GradedModule source;
  GradedModule target;
  PolyMatrix matrix;
  std::int32_t shift = 0;

  static ModuleMap make(GradedModule source, GradedModule target, PolyMatrix matrix, std::int32_t shift,
                        bool validate = true);
  static ModuleMap identity(const GradedModule& m);
  static ModuleMap zero(const GradedModule& source, const GradedModule& target, std::int32_t shift = 0);

  ModVec apply(const ModVec& v) const;
  /// Relations of the source land in the relations of the target.
  bool is_well_defined() const;
  bool is_zero() const;
};

ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f
ModuleMap add(const ModuleMap& a, const ModuleMap& b);
ModuleMap scale(const ModuleMap& a, Coeff c);
bool maps_equal(const ModuleMap& a, const ModuleMap& b);

/// Submodule of F0/R generated by the columns of G, with inclusion data.
struct Subquotient {
  GradedModule module;
  PolyMatrix inclusion;  // columns: chosen generators in ambient F0 coordinates
  std::shared_ptr<const ModuleGB> lifter;  // counted = inclusion columns, uncounted = R
  /// Coordinates in module generators of an ambient element of the submodule.
  std::optional<ModVec> lift(const ModVec& v) const;
};

Subquotient subquotient(const RingPtr& ring, const std::vector<std::int32_t>& ambient_degrees,
                        const PolyMatrix& gens, const PolyMatrix& rels);

struct MinimalPresentation {
  GradedModule module;
  ModuleMap to_minimal;    // M -> module
  ModuleMap from_minimal;  // module -> M
  std::size_t nu() const noexcept { return module.num_generators(); }
};

MinimalPresentation minimal_presentation(const GradedModule& m);

struct KernelData {
  GradedModule module;
  ModuleMap inclusion;
  Subquotient sub;
};

struct MapDecomposition {
  KernelData kernel;
  GradedModule cokernel;
  ModuleMap projection;
  GradedModule image;
  ModuleMap image_inclusion;
};

/// Kernel generators of f as columns in source F0 coordinates (not reduced
/// modulo source relations).
PolyMatrix kernel_generators(const ModuleMap& f);
KernelData map_kernel(const ModuleMap& f);
MapDecomposition map_kernel_cokernel(const ModuleMap& f);

struct Resolution {
  GradedModule module;                         // minimal presentation of the input
  std::vector<std::vector<std::int32_t>> free_degrees;  // F_0 .. F_len
  std::vector<PolyMatrix> differentials;       // d_1 .. d_len, d_i : F_i -> F_{i-1}
  std::vector<std::size_t> betti() const;
  std::size_t length() const noexcept { return differentials.size(); }
};

Resolution free_resolution(const GradedModule& m, std::size_t length);
/// Omega^i(M), minimally presented (Omega^0 is the minimal presentation of M).
GradedModule syzygy(const GradedModule& m, std::size_t i);
/// Omega^i from an existing resolution (needs length >= i + 1 for i >= 1).
GradedModule syzygy(const Resolution& res, std::size_t i);

struct DirectSum {
  GradedModule module;
  std::vector<GradedModule> summands;
  std::vector<ModuleMap> iota;
  std::vector<ModuleMap> pi;
};

DirectSum direct_sum(const std::vector<GradedModule>& summands);

struct LengthData {
  bool finite = false;
  long length = 0;                          // valid when finite
  std::map<std::int32_t, long> hilbert;     // all nonzero pieces when finite
};

LengthData length_and_hilbert(const GradedModule& m);
long hilbert_value(const GradedModule& m, std::int32_t degree);
/// Standard monomial basis of M_d as (monomial, generator) pairs.
std::vector<std::pair<Monomial, std::uint32_t>> graded_piece_basis(const GradedModule& m, std::int32_t d);

GradedModule truncation_module(const RingPtr& ring, int n);
GradedModule residue_field(const RingPtr& ring);
GradedModule ideal_module(const IdealHandle& ideal);

struct FiniteLengthPart {
  GradedModule h0;
  ModuleMap inclusion;
  GradedModule quotient;
  ModuleMap projection;
};

FiniteLengthPart finite_length_submodule(const GradedModule& m);

/// Smallest i with Ext^i(k, M) != 0.
int depth(const GradedModule& m);

struct FittingLimits {
  std::size_t max_minors = 250000;  // C(12,4)^2 minors, the 12-column / size-4 guard
};

IdealHandle fitting_ideal(const GradedModule& m, int j, const FittingLimits& limits = {});

struct WitnessCheck {
  std::string name;
  bool fitt_t_not_contained = false;
  bool fitt_low_locally_zero = false;
  int local_rank = -1;
};

struct RankCertificate {
  bool pass = false;
  int t = 0;
  bool fitt_low_zero = false;     // Fitt_{t-1} inside H^0_m(R)
  bool fitt_t_m_primary = false;  // Fitt_t m-primary or the unit ideal
  std::string method_low;         // "minors" or "dual-witness"
  std::size_t minors_used = 0;
  std::vector<WitnessCheck> witnesses;
  std::string reason;
};

RankCertificate rank_punctured_certificate(const GradedModule& m, int t,
                                           const std::vector<std::pair<std::string, IdealHandle>>& witness_primes = {},
                                           const FittingLimits& limits = {});

/// g - max{k : some k-minor of the presentation is not in p}.
int local_rank_at(const GradedModule& m, const IdealHandle& prime, const FittingLimits& limits = {});

}  // namespace bigindec
