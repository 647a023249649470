#include "bigindec/pipeline.hpp"

#include <chrono>
#include <sstream>

#include "bigindec/oracle.hpp"

namespace bigindec {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

ModuleMap multiplication(const GradedModule& m, int var) {
  const GradedRing& ring = m.r();
  PolyMatrix mat(m.degrees(), m.degrees());
  for (std::size_t i = 0; i < m.num_generators(); ++i) mat.at(i, i) = ring.var(var);
  return ModuleMap::make(m, m, mat, ring.weights()[static_cast<std::size_t>(var)], false);
}

// dim V / mV for V = Ext^1(M, T), with mV spanned by variable multiples of
// the basis classes.
long ext_generators_over_r(const ExtSpace& space) {
  const auto& f = space.target().r().field();
  const GradedModule& m = space.source();
  std::vector<ModuleMap> mults;
  for (int v = 0; v < m.r().num_vars(); ++v) mults.push_back(multiplication(m, v));
  SubspaceBasis mv(space.dim(), f);
  for (const auto& b : space.basis())
    for (const auto& x : mults) mv.insert(space.coordinates(ext_action(b, x)));
  return static_cast<long>(space.dim() - mv.size());
}

long binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  long out = 1;
  for (long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// Finite differences of order `order` vanish on values[from..].
bool differences_vanish(const std::vector<long>& values, std::size_t from, int order) {
  std::vector<long> d(values.begin() + static_cast<std::ptrdiff_t>(from), values.end());
  for (int k = 0; k < order; ++k) {
    for (std::size_t i = 0; i + 1 < d.size(); ++i) d[i] = d[i + 1] - d[i];
    d.pop_back();
  }
  for (long x : d)
    if (x != 0) return false;
  return true;
}

bool is_local(const GradedModule& m, std::uint64_t seed) {
  return locality_and_idempotents(degree_zero_endomorphisms(m).algebra, seed).local;
}

}  // namespace

long GHPFit::evaluate(int n) const {
  long out = 0;
  for (std::size_t k = 0; k < newton.size(); ++k) out += newton[k] * binomial(n - stable_from, static_cast<long>(k));
  return out;
}

GHPFit ghp_fit(const GradedModule& m, int n_max) {
  require(n_max >= 1, ErrorKind::Precondition, "ghp_fit: nMax must be positive");
  const RingPtr& ring = m.ring();
  GHPFit fit;
  fit.n_max = n_max;
  fit.s = annihilator_exponent(m);
  for (int n = 1; n <= n_max; ++n) {
    ExtSpace space(m, truncation_module(ring, n));
    fit.lengths.push_back(static_cast<long>(space.dim()));
    fit.nu.push_back(ext_generators_over_r(space));
    fit.max_nu = std::max(fit.max_nu, fit.nu.back());
  }
  // least degree first, then the earliest start; one value beyond the
  // interpolation points must confirm the fit
  for (int d = 0; d + 3 <= n_max && fit.degree < 0; ++d)
    for (int from = 1; from + d + 2 <= n_max; ++from)
      if (differences_vanish(fit.lengths, static_cast<std::size_t>(from - 1), d + 1)) {
        fit.degree = d;
        fit.stable_from = from;
        break;
      }
  if (fit.degree >= 0) {
    std::vector<long> diff(fit.lengths.begin() + fit.stable_from - 1, fit.lengths.end());
    for (int k = 0; k <= fit.degree; ++k) {
      fit.newton.push_back(diff[0]);
      for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
      diff.pop_back();
    }
    // a linear lower bound on the tail
    long a = -1;
    for (int n = fit.stable_from; n < n_max; ++n) {
      long step = fit.lengths[n] - fit.lengths[n - 1];
      a = a < 0 ? step : std::min(a, step);
    }
    fit.slope = std::max(0L, a);
    long b = 0;
    bool first = true;
    for (int n = fit.stable_from; n <= n_max; ++n) {
      long c = fit.lengths[n - 1] - fit.slope * n;
      b = first ? c : std::min(b, c);
      first = false;
    }
    fit.intercept = b;
  }
  fit.degree_is_dim_minus_one = fit.degree >= 0 && fit.degree == ring->krull_dim() - 1;
  fit.t = 1;
  for (int i = 1; i < fit.s; ++i)
    fit.t = std::max<long>(fit.t, static_cast<long>(minimal_presentation(ideal_module(power_of_maximal(ring, i))).nu()));
  return fit;
}

int janet_bound(long s, long a, long b, long t, long h) {
  require(s > 0 && a > 0, ErrorKind::Precondition, "janet_bound: s and a must be positive");
  long need = s * (t * h + 1) - b;
  long n = need <= 0 ? 1 : (need + a - 1) / a;
  return static_cast<int>(std::max(1L, n));
}

std::vector<Summand> decompose(const GradedModule& m, std::uint64_t seed) {
  require(!m.is_zero(), ErrorKind::Precondition, "decompose: zero module");
  End0 e0 = degree_zero_endomorphisms(m);
  LocalityVerdict lv = locality_and_idempotents(e0.algebra, seed);
  if (lv.local) return {Summand{m, ModuleMap::identity(m), ModuleMap::identity(m)}};
  ModuleMap e = e0.hom.combination(*lv.idempotent);
  ModuleMap id = ModuleMap::identity(m);
  ModuleMap one_minus_e = add(id, scale(e, m.r().field().neg(1)));
  std::vector<Summand> out;
  for (const auto& [q, other] : {std::pair{e, one_minus_e}, std::pair{one_minus_e, e}}) {
    // the image of q is M / (1 - q)M
    GradedModule image(m.ring(), m.degrees(), concat_columns(m.relations(), other.matrix));
    MinimalPresentation mp = minimal_presentation(image);
    ModuleMap proj = compose(mp.to_minimal, ModuleMap::make(m, image, PolyMatrix::identity(m.degrees()), 0, false));
    ModuleMap inc = compose(ModuleMap::make(image, m, q.matrix, 0), mp.from_minimal);
    for (auto& piece : decompose(mp.module, seed))
      out.push_back(Summand{piece.module, compose(inc, piece.inclusion), compose(piece.projection, proj)});
  }
  return out;
}

std::optional<int> punctured_rank(const GradedModule& m,
                                  const std::vector<std::pair<std::string, IdealHandle>>& witnesses) {
  for (int t = 0; t <= static_cast<int>(m.num_generators()); ++t)
    if (rank_punctured_certificate(m, t, witnesses).pass) return t;
  return std::nullopt;
}

SeedReport canonical_seed(const RingPtr& ring, std::uint64_t seed) {
  int d = ring->krull_dim();
  require(d > 0, ErrorKind::Precondition, "canonical_seed: the ring has dimension 0");
  SeedReport out;
  int depth_r = depth(GradedModule::free(ring, {0}));
  if (depth_r < 2) out.warnings.push_back("depth R = " + std::to_string(depth_r) + " < 2");
  GradedModule omega = syzygy(residue_field(ring), static_cast<std::size_t>(d));
  require(omega.num_generators() > 0, ErrorKind::Precondition, "canonical_seed: zero syzygy");
  FiniteLengthPart flp = finite_length_submodule(omega);
  GradedModule q = minimal_presentation(flp.quotient).module;
  require(!q.is_zero(), ErrorKind::Precondition, "canonical_seed: syzygy is of finite length");
  auto parts = decompose(q, seed);
  out.summands = parts.size();
  int best_rank = -1;
  for (const auto& p : parts) {
    int rk = punctured_rank(p.module).value_or(-1);
    if (rk > best_rank || (rk == best_rank && p.module.num_generators() < out.module.num_generators())) {
      best_rank = rk;
      out.module = p.module;
    }
  }
  out.rank = best_rank;
  out.depth = depth(out.module);
  if (out.module.relations().cols() == 0)
    out.warnings.push_back("seed is free: Ext^1 vanishes and the construction degenerates");
  return out;
}

Selection select_generators(const GradedModule& m, int r, int n_max) {
  require(r >= 1, ErrorKind::Precondition, "select_generators: r must be positive");
  require(n_max >= 1, ErrorKind::Precondition, "select_generators: nMax must be positive");
  require(!m.is_zero(), ErrorKind::Precondition, "select_generators: zero module");
  require(is_local(m, 1), ErrorKind::Precondition, "module decomposable: End_0(M) is not local");
  require(depth(m) > 0, ErrorKind::Precondition, "depth zero: M has a finite-length submodule");
  Selection out;
  out.s = annihilator_exponent(m);
  if (out.s == 0) fail(ErrorKind::SearchExhausted, "search exhausted: Ext^1 vanishes (M is free)");
  ReducedEnd red = reduce_mod_m(end_algebra(m), out.s);
  std::ostringstream table;
  for (int n = 1; n <= n_max; ++n) {
    ExtSpace space(m, truncation_module(m.ring(), n));
    table << (n > 1 ? ", " : "") << space.dim();
    if (space.dim() <= static_cast<std::size_t>(r)) continue;
    FinDimModule v = ext_as_module(space, red);
    GeneratorSelection sel = minimal_generators_over(red.algebra, v);
    if (sel.nu <= static_cast<std::size_t>(r)) continue;
    out.n = n;
    out.nu = sel.nu;
    std::vector<Vec> gens;
    for (int i = 0; i < r; ++i) {
      std::size_t idx = sel.chosen[static_cast<std::size_t>(i)];
      out.chosen.push_back(idx);
      out.generators.push_back(space.basis()[idx]);
      Vec g(space.dim(), 0);
      g[idx] = 1;
      gens.push_back(std::move(g));
    }
    RowAnnihilator ra = row_annihilator(red.algebra, v, gens);
    out.premise = ra.contained;
    out.kernel_dim = ra.kernel_dim;
    return out;
  }
  fail(ErrorKind::SearchExhausted, "search exhausted: nu over End(M) never exceeds " + std::to_string(r) +
                                       " for n <= " + std::to_string(n_max) + " (lengths " + table.str() + ")");
}

RowAnnihilator class_annihilator(const ExtClass& alpha, const DirectSum& sum, const ReducedEnd& e) {
  const auto& f = alpha.target.r().field();
  std::size_t r = sum.summands.size(), dim = e.algebra.dim();
  ExtSpace space(sum.module, alpha.target);
  std::size_t cols = r * r * dim;
  DenseMatrix a(space.dim(), cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        const ModuleMap& base = e.maps[k];
        std::int32_t shift = base.shift + sum.summands[i].degrees()[0] - sum.summands[j].degrees()[0];
        ModuleMap block = ModuleMap::make(sum.summands[j], sum.summands[i], base.matrix, shift, false);
        ModuleMap g = compose(sum.iota[i], compose(block, sum.pi[j]));
        auto c = space.coordinates(ext_action(alpha, g));
        std::size_t col = matrix_index(i, j, k, r, dim);
        for (std::size_t row = 0; row < c.size(); ++row) a(row, col) = c[row];
      }
  std::vector<Vec> ker;
  if (space.dim() == 0) {
    for (std::size_t c = 0; c < cols; ++c) {
      Vec v(cols, 0);
      v[c] = 1;
      ker.push_back(std::move(v));
    }
  } else {
    ker = kernel(a, f);
  }
  FinDimAlgebra big = matrix_algebra(e.algebra, r);
  RowAnnihilator out;
  out.kernel_dim = ker.size();
  out.radical_dim = radical(big).size();
  out.contained = jacobson_containment(big, ker);
  return out;
}

ConstructionCertificate construct_big_indecomposable(const GradedModule& m, int r,
                                                     const ConstructionOptions& options) {
  ConstructionCertificate c;
  c.ring = m.ring();
  c.m = m;
  c.r = r;
  c.seed = options.seed;
  c.n_max = options.n_max;
  auto t0 = Clock::now();
  Selection sel = select_generators(m, r, options.n_max);
  c.n = sel.n;
  c.s = sel.s;
  c.nu = sel.nu;
  c.chosen = sel.chosen;
  c.generators = sel.generators;
  c.premise = sel.premise;
  c.timings["select"] = seconds_since(t0);

  t0 = Clock::now();
  auto rank_m = punctured_rank(m);
  require(rank_m.has_value() && *rank_m >= 1, ErrorKind::Precondition,
          "M is not free of constant positive rank on the punctured spectrum");
  c.rank_m = *rank_m;
  c.timings["rank_m"] = seconds_since(t0);

  t0 = Clock::now();
  std::vector<GradedModule> summands;
  std::vector<ExtClass> parts;
  for (const auto& g : c.generators) {
    parts.push_back(g.regraded(g.degree));
    summands.push_back(parts.back().source);
  }
  DirectSum ds = direct_sum(summands);
  c.m_sum = ds.module;
  c.alpha = phi_inverse(parts, ds);
  c.sequence = pushout_extension(c.alpha);
  c.verdicts.exact = c.sequence.verified;
  c.timings["assemble"] = seconds_since(t0);

  t0 = Clock::now();
  c.verdicts.nonsplit = !is_split(c.sequence);
  c.timings["nonsplit"] = seconds_since(t0);

  t0 = Clock::now();
  ReducedEnd red = reduce_mod_m(end_algebra(m), c.s);
  c.verdicts.ann_in_radical = class_annihilator(c.alpha, ds, red).contained;
  c.timings["ann_in_radical"] = seconds_since(t0);

  t0 = Clock::now();
  const GradedModule& x = c.sequence.middle();
  End0 e0 = degree_zero_endomorphisms(x);
  c.end0_dim = e0.hom.dim();
  c.verdicts.end0_local = locality_and_idempotents(e0.algebra, options.seed).local;
  c.timings["end0_local"] = seconds_since(t0);

  t0 = Clock::now();
  RankCertificate rc = rank_punctured_certificate(x, r * c.rank_m);
  c.verdicts.rank = RankVerdict{rc.t, rc.pass, rc.fitt_low_zero, rc.fitt_t_m_primary};
  c.timings["rank"] = seconds_since(t0);

  t0 = Clock::now();
  c.depth_m = depth(m);
  c.depth_sum = depth(c.m_sum);
  c.depth_x = depth(x);
  c.timings["depth"] = seconds_since(t0);

  if (options.oracle) {
    t0 = Clock::now();
    c.oracle.ext_dim = oracle_ext_dim(m, c.n);
    c.oracle.ext_dim_agreement =
        c.oracle.ext_dim == static_cast<long>(ExtSpace(m, truncation_module(m.ring(), c.n)).dim());
    c.oracle.split_found = oracle_split_search(c.sequence).found;
    c.oracle.idempotent_trials = options.idempotent_trials;
    c.oracle.idempotent_found = oracle_random_idempotent(x, options.idempotent_trials, options.seed).found;
    c.timings["oracle"] = seconds_since(t0);
  }

  std::vector<std::pair<const char*, bool>> checks{
      {"exact", c.verdicts.exact},
      {"nonsplit", c.verdicts.nonsplit},
      {"ann_in_radical", c.verdicts.ann_in_radical},
      {"end0_local", c.verdicts.end0_local},
      {"rank", c.verdicts.rank.pass},
      {"premise", c.premise},
      {"depth", c.depth_x == 0 && c.depth_sum == c.depth_m && c.depth_m > 0},
  };
  if (options.oracle) {
    checks.emplace_back("oracle.ext_dim_agreement", c.oracle.ext_dim_agreement);
    checks.emplace_back("oracle.split_search", !c.oracle.split_found);
    checks.emplace_back("oracle.idempotent", !c.oracle.idempotent_found);
  }
  c.valid = true;
  for (const auto& [name, ok] : checks)
    if (!ok) {
      c.valid = false;
      c.failing = name;
      break;
    }
  return c;
}

}  // namespace bigindec
