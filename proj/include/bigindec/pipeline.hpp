#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bigindec/findim.hpp"
#include "bigindec/yoneda.hpp"

namespace bigindec {

/// Lengths of Ext^1(M, R/m^n) for n = 1..nMax with an exact polynomial fit of
/// the stable tail.
struct GHPFit {
  int n_max = 0;
  int s = 0;                     // annihilator exponent of M
  std::vector<long> lengths;     // index n - 1
  std::vector<long> nu;          // minimal generators over R, index n - 1
  int stable_from = 0;           // first n of the tail, 0 when no tail fits
  int degree = -1;               // degree of the fitted polynomial, -1 when none
  std::vector<long> newton;      // forward differences at stable_from
  long slope = 0;                // a in lambda(n) >= a n + b on the tail
  long intercept = 0;            // b
  long max_nu = 0;
  long t = 0;                    // max nu_R(m^i) for 0 <= i < s
  bool degree_is_dim_minus_one = false;

  /// The fitted polynomial at n (exact; binomial Newton form).
  long evaluate(int n) const;
};

GHPFit ghp_fit(const GradedModule& m, int n_max);

/// Smallest n >= 1 with (a n + b) / s >= t h + 1.
int janet_bound(long s, long a, long b, long t, long h);

struct Summand {
  GradedModule module;
  ModuleMap inclusion;   // summand -> M
  ModuleMap projection;  // M -> summand
};

/// Splits along idempotents of End_0 until every factor has local End_0.
/// Projection o inclusion is the identity on each factor and the sum of
/// inclusion o projection is the identity of M.
std::vector<Summand> decompose(const GradedModule& m, std::uint64_t seed = 1);

/// Smallest t in 0..nu(M) for which the punctured rank certificate passes.
std::optional<int> punctured_rank(const GradedModule& m,
                                  const std::vector<std::pair<std::string, IdealHandle>>& witnesses = {});

struct SeedReport {
  GradedModule module;
  int depth = 0;
  int rank = -1;
  std::size_t summands = 0;
  std::vector<std::string> warnings;
};

/// Omega^d(k) / H^0_m for d = dim R, decomposed; keeps the summand of largest
/// punctured rank, then fewest generators.
SeedReport canonical_seed(const RingPtr& ring, std::uint64_t seed = 1);

struct Selection {
  int n = 0;
  int s = 0;
  std::size_t nu = 0;                  // nu over End(M) at the chosen n
  std::vector<std::size_t> chosen;     // indices into the Ext basis
  std::vector<ExtClass> generators;
  bool premise = false;                // row annihilator of the generators inside the radical
  std::size_t kernel_dim = 0;
};

/// Smallest n <= nMax with nu over End(M) exceeding r, the first r greedy
/// minimal generators and the row-annihilator verdict.
Selection select_generators(const GradedModule& m, int r, int n_max);

struct RankVerdict {
  int t = 0;
  bool pass = false;
  bool fitt_low_zero = false;
  bool fitt_t_m_primary = false;
};

struct Verdicts {
  bool exact = false;
  bool nonsplit = false;
  bool ann_in_radical = false;
  bool end0_local = false;
  RankVerdict rank;
};

struct OracleReport {
  long ext_dim = -1;
  bool ext_dim_agreement = false;
  bool split_found = true;
  int idempotent_trials = 0;
  bool idempotent_found = true;
};

struct ConstructionOptions {
  int n_max = 12;
  int idempotent_trials = 200;
  std::uint64_t seed = 20240611;
  bool oracle = true;
};

struct ConstructionCertificate {
  RingPtr ring;
  GradedModule m;
  int r = 0;
  int n = 0;
  int s = 0;
  int rank_m = 0;
  std::size_t nu = 0;
  std::vector<std::size_t> chosen;
  std::vector<ExtClass> generators;  // as computed, degrees from the Ext basis
  GradedModule m_sum;                // sum of M(-d_i) so that alpha has degree 0
  ExtClass alpha;
  ShortExactSequence sequence;
  bool premise = false;
  std::size_t end0_dim = 0;  // dim_k End_0(X)
  Verdicts verdicts;
  OracleReport oracle;
  int depth_m = -1, depth_sum = -1, depth_x = -1;
  std::uint64_t seed = 0;
  int n_max = 0;
  bool valid = false;
  std::string failing;  // first failed check when not valid
  std::map<std::string, double> timings;
};

/// The full construction; failed checks give an invalid certificate naming
/// the first failure. Search exhaustion and precondition failures throw.
ConstructionCertificate construct_big_indecomposable(const GradedModule& m, int r,
                                                     const ConstructionOptions& options = {});

/// Kernel of gamma -> alpha . gamma on M_r(End(M) / m^s) and whether it lies
/// in the radical.
RowAnnihilator class_annihilator(const ExtClass& alpha, const DirectSum& sum, const ReducedEnd& e);

}  // namespace bigindec
