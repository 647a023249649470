#include "bigindec/module.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <unordered_map>

#include "bigindec/minors.hpp"

namespace bigindec {

namespace detail {
struct ModuleCache {
  std::once_flag once, once_lift, once_syz;
  ModuleGB gb, lifter;
  PolyMatrix syz;
};
}  // namespace detail

namespace {

PolyMatrix with_degrees(const PolyMatrix& m, std::vector<std::int32_t> rows, std::vector<std::int32_t> cols) {
  require(rows.size() == m.rows() && cols.size() == m.cols(), ErrorKind::Internal, "with_degrees: shape mismatch");
  PolyMatrix out(std::move(rows), std::move(cols));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
  return out;
}

std::vector<std::int32_t> plus(std::vector<std::int32_t> v, std::int32_t d) {
  for (auto& x : v) x += d;
  return v;
}

PolyMatrix drop_zero_columns(const PolyMatrix& m) {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < m.rows() && zero; ++i) zero = m.at(i, j).is_zero();
    if (!zero) keep.push_back(j);
  }
  return keep.size() == m.cols() ? m : m.select_columns(keep);
}

}  // namespace

GradedModule::GradedModule() : cache_(std::make_shared<detail::ModuleCache>()) {}

GradedModule::GradedModule(RingPtr ring, std::vector<std::int32_t> generator_degrees, PolyMatrix relations,
                           bool minimal)
    : ring_(std::move(ring)), degrees_(std::move(generator_degrees)), minimal_(minimal),
      cache_(std::make_shared<detail::ModuleCache>()) {
  require(relations.rows() == degrees_.size(), ErrorKind::Input,
          "module relations must have one row per generator");
  relations = with_degrees(relations, degrees_, relations.col_degrees());
  require(relations.is_homogeneous(), ErrorKind::Input, "module relation is not homogeneous");
  relations_ = drop_zero_columns(reduce_entries(relations, *ring_));
}

GradedModule GradedModule::free(RingPtr ring, std::vector<std::int32_t> degrees) {
  PolyMatrix rel(degrees, {});
  return GradedModule(std::move(ring), std::move(degrees), std::move(rel), true);
}

const ModuleGB& GradedModule::relation_gb() const {
  std::call_once(cache_->once, [this] { cache_->gb = submodule_gb(*ring_, degrees_, relations_); });
  return cache_->gb;
}

const ModuleGB& GradedModule::relation_lifter() const {
  std::call_once(cache_->once_lift, [this] {
    cache_->lifter = tracked_gb(*ring_, relations_, PolyMatrix(degrees_, {}), false);
  });
  return cache_->lifter;
}

const PolyMatrix& GradedModule::relation_syzygies() const {
  std::call_once(cache_->once_syz, [this] {
    cache_->syz = relations_.cols() == 0 ? PolyMatrix(relations_.col_degrees(), {}) : syzygies(*ring_, relations_);
  });
  return cache_->syz;
}

bool GradedModule::is_zero() const {
  for (std::size_t i = 0; i < num_generators(); ++i)
    if (!is_zero_element(generator(i))) return false;
  return true;
}

ModVec GradedModule::generator(std::size_t i) const {
  return ModVec({VecTerm{Monomial{}, static_cast<std::uint32_t>(i), degrees_[i], 1}});
}

GradedModule GradedModule::shifted(std::int32_t d) const {
  return GradedModule(ring_, plus(degrees_, d), relations_.shifted(d), minimal_);
}

ModuleMap ModuleMap::make(GradedModule source, GradedModule target, PolyMatrix matrix, std::int32_t shift,
                          bool validate) {
  require(source.ring().get() == target.ring().get(), ErrorKind::RingMismatch, "module map: ring mismatch");
  require(matrix.rows() == target.num_generators() && matrix.cols() == source.num_generators(),
          ErrorKind::Input, "module map: matrix shape does not match the modules");
  ModuleMap f;
  f.matrix = reduce_entries(with_degrees(matrix, target.degrees(), plus(source.degrees(), shift)), target.r());
  require(f.matrix.is_homogeneous(), ErrorKind::Input, "module map: matrix is not homogeneous of the given degree");
  f.source = std::move(source);
  f.target = std::move(target);
  f.shift = shift;
  if (validate) require(f.is_well_defined(), ErrorKind::Input, "module map does not respect relations");
  return f;
}

ModuleMap ModuleMap::identity(const GradedModule& m) {
  return make(m, m, PolyMatrix::identity(m.degrees()), 0, false);
}

ModuleMap ModuleMap::zero(const GradedModule& source, const GradedModule& target, std::int32_t shift) {
  return make(source, target, PolyMatrix(target.degrees(), plus(source.degrees(), shift)), shift, false);
}

ModVec ModuleMap::apply(const ModVec& v) const { return bigindec::apply(matrix, v, target.r()); }

bool ModuleMap::is_well_defined() const {
  PolyMatrix img = multiply(matrix, source.relations(), target.r());
  for (const auto& c : img.columns())
    if (!target.is_zero_element(c)) return false;
  return true;
}

bool ModuleMap::is_zero() const {
  for (const auto& c : matrix.columns())
    if (!target.is_zero_element(c)) return false;
  return true;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  require(f.target.num_generators() == g.source.num_generators(), ErrorKind::Internal, "compose: shape mismatch");
  PolyMatrix m = multiply(g.matrix, f.matrix, g.target.r());
  return ModuleMap::make(f.source, g.target, m, f.shift + g.shift, false);
}

ModuleMap add(const ModuleMap& a, const ModuleMap& b) {
  require(a.shift == b.shift, ErrorKind::Internal, "map sum: degree mismatch");
  return ModuleMap::make(a.source, a.target, add(a.matrix, b.matrix, a.target.r()), a.shift, false);
}

ModuleMap scale(const ModuleMap& a, Coeff c) {
  return ModuleMap::make(a.source, a.target, scale(a.matrix, c, a.target.r()), a.shift, false);
}

bool maps_equal(const ModuleMap& a, const ModuleMap& b) {
  if (a.matrix.rows() != b.matrix.rows() || a.matrix.cols() != b.matrix.cols()) return false;
  const auto& f = a.target.r().field();
  auto ca = a.matrix.columns();
  auto cb = b.matrix.columns();
  for (std::size_t j = 0; j < ca.size(); ++j) {
    ModVec d = bigindec::add(ca[j], scale(cb[j], f.neg(1), f), f);
    if (!a.target.is_zero_element(d)) return false;
  }
  return true;
}

std::optional<ModVec> Subquotient::lift(const ModVec& v) const { return lifter->lift(v); }

Subquotient subquotient(const RingPtr& ring, const std::vector<std::int32_t>& ambient_degrees,
                        const PolyMatrix& gens, const PolyMatrix& rels) {
  PolyMatrix g = with_degrees(gens, ambient_degrees, gens.col_degrees());
  PolyMatrix r = with_degrees(rels, ambient_degrees, rels.col_degrees());
  PolyMatrix chosen = g.select_columns(minimal_columns(*ring, g, r));
  auto gb = std::make_shared<ModuleGB>(tracked_gb(*ring, chosen, r, true));
  std::vector<ModVec> cols;
  std::vector<std::int32_t> degs;
  for (const auto& s : gb->syzygies()) {
    cols.push_back(s);
    degs.push_back(s.degree());
  }
  PolyMatrix raw =
      drop_zero_columns(reduce_entries(PolyMatrix::from_columns(cols, chosen.col_degrees(), degs), *ring));
  PolyMatrix none(raw.row_degrees(), {});
  PolyMatrix rel = raw.select_columns(minimal_columns(*ring, raw, none));
  Subquotient out;
  out.module = GradedModule(ring, chosen.col_degrees(), rel, true);
  out.inclusion = chosen;
  out.lifter = std::move(gb);
  return out;
}

MinimalPresentation minimal_presentation(const GradedModule& m) {
  Subquotient sq = subquotient(m.ring(), m.degrees(), PolyMatrix::identity(m.degrees()), m.relations());
  MinimalPresentation out;
  out.module = sq.module;
  out.from_minimal = ModuleMap::make(sq.module, m, sq.inclusion, 0, false);
  std::vector<ModVec> cols;
  for (std::size_t k = 0; k < m.num_generators(); ++k) {
    auto c = sq.lift(m.generator(k));
    require(c.has_value(), ErrorKind::Internal, "minimal_presentation: generator not liftable");
    cols.push_back(*c);
  }
  PolyMatrix to = PolyMatrix::from_columns(cols, sq.module.degrees(), m.degrees());
  out.to_minimal = ModuleMap::make(m, sq.module, to, 0, false);
  return out;
}

PolyMatrix kernel_generators(const ModuleMap& f) {
  PolyMatrix k = relative_syzygies(f.target.r(), f.target.degrees(), f.matrix, f.target.relations());
  return with_degrees(k, f.source.degrees(), plus(k.col_degrees(), -f.shift));
}

KernelData map_kernel(const ModuleMap& f) {
  PolyMatrix k = kernel_generators(f);
  Subquotient sq = subquotient(f.source.ring(), f.source.degrees(), k, f.source.relations());
  KernelData out{sq.module, ModuleMap::make(sq.module, f.source, sq.inclusion, 0, false), sq};
  return out;
}

MapDecomposition map_kernel_cokernel(const ModuleMap& f) {
  MapDecomposition out{map_kernel(f), {}, {}, {}, {}};
  out.cokernel = GradedModule(f.target.ring(), f.target.degrees(), concat_columns(f.target.relations(), f.matrix));
  out.projection = ModuleMap::make(f.target, out.cokernel, PolyMatrix::identity(f.target.degrees()), 0, false);
  Subquotient im = subquotient(f.target.ring(), f.target.degrees(), f.matrix, f.target.relations());
  out.image = im.module;
  out.image_inclusion = ModuleMap::make(im.module, f.target, im.inclusion, 0, false);
  return out;
}

std::vector<std::size_t> Resolution::betti() const {
  std::vector<std::size_t> b;
  for (const auto& d : free_degrees) b.push_back(d.size());
  return b;
}

Resolution free_resolution(const GradedModule& m, std::size_t length) {
  Resolution res;
  res.module = minimal_presentation(m).module;
  res.free_degrees.push_back(res.module.degrees());
  const auto& ring = res.module.r();
  for (std::size_t i = 1; i <= length; ++i) {
    PolyMatrix d;
    if (i == 1) {
      d = res.module.relations();
    } else {
      const PolyMatrix& prev = res.differentials.back();
      d = prev.cols() == 0 ? PolyMatrix(prev.col_degrees(), {}) : syzygies(ring, prev);
    }
    res.free_degrees.push_back(d.col_degrees());
    res.differentials.push_back(std::move(d));
  }
  return res;
}

GradedModule syzygy(const Resolution& res, std::size_t i) {
  if (i == 0) return res.module;
  require(res.length() >= i + 1, ErrorKind::Internal, "syzygy: resolution too short");
  return GradedModule(res.module.ring(), res.free_degrees[i], res.differentials[i], true);
}

GradedModule syzygy(const GradedModule& m, std::size_t i) { return syzygy(free_resolution(m, i + 1), i); }

DirectSum direct_sum(const std::vector<GradedModule>& summands) {
  require(!summands.empty(), ErrorKind::Precondition, "direct_sum: no summands");
  for (const auto& s : summands)
    require(s.ring().get() == summands[0].ring().get(), ErrorKind::RingMismatch, "direct_sum: ring mismatch");
  std::vector<PolyMatrix> blocks;
  std::vector<std::int32_t> degs;
  for (const auto& s : summands) {
    blocks.push_back(s.relations());
    degs.insert(degs.end(), s.degrees().begin(), s.degrees().end());
  }
  DirectSum out;
  out.summands = summands;
  PolyMatrix rel = block_diagonal(blocks);
  out.module = GradedModule(summands[0].ring(), degs, with_degrees(rel, degs, rel.col_degrees()));
  std::size_t off = 0;
  for (const auto& s : summands) {
    PolyMatrix i(degs, s.degrees());
    PolyMatrix p(s.degrees(), degs);
    for (std::size_t k = 0; k < s.num_generators(); ++k) {
      i.at(off + k, k) = Polynomial::constant(1);
      p.at(k, off + k) = Polynomial::constant(1);
    }
    out.iota.push_back(ModuleMap::make(s, out.module, i, 0, false));
    out.pi.push_back(ModuleMap::make(out.module, s, p, 0, false));
    off += s.num_generators();
  }
  return out;
}

std::vector<std::pair<Monomial, std::uint32_t>> graded_piece_basis(const GradedModule& m, std::int32_t d) {
  std::vector<std::pair<Monomial, std::uint32_t>> out;
  const auto& gb = m.relation_gb();
  for (std::uint32_t c = 0; c < m.num_generators(); ++c) {
    int e = d - m.degrees()[c];
    if (e < 0) continue;
    for (const auto& mon : m.r().monomials_of_degree(e))
      if (!gb.is_leading(mon, c)) out.emplace_back(mon, c);
  }
  return out;
}

long hilbert_value(const GradedModule& m, std::int32_t degree) {
  return static_cast<long>(graded_piece_basis(m, degree).size());
}

LengthData length_and_hilbert(const GradedModule& m) {
  LengthData out;
  const auto& gb = m.relation_gb();
  const auto& ring = m.r();
  int nv = ring.num_vars();
  std::vector<std::vector<Monomial>> per_comp(m.num_generators());
  for (const auto& t : gb.leads()) per_comp[t.comp].push_back(t.mon);
  for (std::uint32_t c = 0; c < m.num_generators(); ++c) {
    int dim = monomial_ideal_dimension(per_comp[c], nv);
    if (dim > 0) return out;
  }
  out.finite = true;
  for (std::uint32_t c = 0; c < m.num_generators(); ++c) {
    if (monomial_ideal_dimension(per_comp[c], nv) < 0) continue;
    int bound = 0;
    for (int v = 0; v < nv; ++v) {
      int k = kMaxExponent;
      for (const auto& mon : per_comp[c]) {
        bool pure = true;
        for (int u = 0; u < nv && pure; ++u)
          if (u != v && mon.exponent(u) != 0) pure = false;
        if (pure && mon.exponent(v) > 0) k = std::min(k, static_cast<int>(mon.exponent(v)));
      }
      bound += (k - 1) * ring.weights()[v];
    }
    for (int e = 0; e <= bound; ++e) {
      long here = 0;
      for (const auto& mon : ring.monomials_of_degree(e))
        if (!gb.is_leading(mon, c)) ++here;
      if (here > 0) out.hilbert[m.degrees()[c] + e] += here;
      out.length += here;
    }
  }
  return out;
}

GradedModule truncation_module(const RingPtr& ring, int n) {
  require(n >= 1, ErrorKind::Precondition, "truncation_module: n must be at least 1");
  std::vector<Polynomial> rels;
  std::vector<std::int32_t> degs;
  for (const auto& mon : ring->monomials_of_standard_degree(n)) {
    Polynomial p = ring->reduce(Polynomial::monomial(mon));
    if (p.is_zero()) continue;
    degs.push_back(mon.degree);
    rels.push_back(std::move(p));
  }
  PolyMatrix m({0}, degs);
  for (std::size_t j = 0; j < rels.size(); ++j) m.at(0, j) = rels[j];
  return GradedModule(ring, {0}, m);
}

GradedModule residue_field(const RingPtr& ring) { return truncation_module(ring, 1); }

GradedModule ideal_module(const IdealHandle& ideal) {
  const auto& ring = ideal.ring();
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators())
    if (!g.is_zero()) gens.push_back(g);
  std::vector<std::int32_t> degs;
  for (const auto& g : gens) degs.push_back(g.degree());
  PolyMatrix row({0}, degs);
  for (std::size_t j = 0; j < gens.size(); ++j) row.at(0, j) = gens[j];
  PolyMatrix none({0}, {});
  row = row.select_columns(minimal_columns(*ring, row, none));
  PolyMatrix rel = syzygies(*ring, row);
  return GradedModule(ring, row.col_degrees(), rel, true);
}

FiniteLengthPart finite_length_submodule(const GradedModule& m) {
  const auto& ring = m.r();
  const auto& degs = m.degrees();
  std::size_t g = degs.size();
  int nv = ring.num_vars();
  PolyMatrix n(degs, {});
  for (;;) {
    PolyMatrix base = concat_columns(m.relations(), n);
    // (base : m) = kernel of F0 -> (F0/base)^v, v -> (x_1 v, ..., x_v v)
    std::vector<std::int32_t> amb;
    for (int i = 0; i < nv; ++i)
      for (auto a : degs) amb.push_back(a - ring.weights()[i]);
    PolyMatrix counted(amb, degs);
    std::vector<PolyMatrix> blocks;
    for (int i = 0; i < nv; ++i) {
      for (std::size_t c = 0; c < g; ++c) counted.at(i * g + c, c) = ring.var(i);
      blocks.push_back(base.shifted(-ring.weights()[i]));
    }
    PolyMatrix unc = blocks.empty() ? PolyMatrix(amb, {}) : block_diagonal(blocks);
    unc = with_degrees(unc, amb, unc.col_degrees());
    PolyMatrix k = relative_syzygies(ring, amb, counted, unc);
    k = with_degrees(k, degs, k.col_degrees());
    ModuleGB bgb = submodule_gb(ring, degs, base);
    bool stable = true;
    for (const auto& c : k.columns())
      if (!bgb.contains(c)) {
        stable = false;
        break;
      }
    if (stable) break;
    n = k;
  }
  FiniteLengthPart out;
  Subquotient sq = subquotient(m.ring(), degs, n, m.relations());
  out.h0 = sq.module;
  out.inclusion = ModuleMap::make(sq.module, m, sq.inclusion, 0, false);
  out.quotient = GradedModule(m.ring(), degs, concat_columns(m.relations(), n));
  out.projection = ModuleMap::make(m, out.quotient, PolyMatrix::identity(degs), 0, false);
  return out;
}

IdealHandle fitting_ideal(const GradedModule& m, int j, const FittingLimits& limits) {
  require(j >= 0, ErrorKind::Precondition, "fitting_ideal: j must be non-negative");
  GradedModule p = minimal_presentation(m).module;
  const auto& ring = p.ring();
  long g = static_cast<long>(p.num_generators());
  long k = g - j;
  if (k <= 0) return IdealHandle(ring, {Polynomial::constant(1)});
  MinorEngine eng(p.relations(), *ring);
  if (k > static_cast<long>(eng.rows()) || k > static_cast<long>(eng.cols())) return IdealHandle(ring, {});
  require(eng.count(static_cast<std::size_t>(k)) <= limits.max_minors, ErrorKind::Precondition,
          "fitting_ideal: number of minors exceeds the size guard");
  std::vector<Polynomial> minors;
  bool unit = false;
  eng.for_each(static_cast<std::size_t>(k), [&](const Polynomial& d) {
    if (d.is_zero()) return true;
    if (d.is_constant()) {
      unit = true;
      return false;
    }
    minors.push_back(d);
    return true;
  });
  if (unit) return IdealHandle(ring, {Polynomial::constant(1)});
  return IdealHandle(ring, minors);
}

namespace {

const IdealHandle& zero_ideal_saturation(const RingPtr& ring, std::optional<IdealHandle>& cache) {
  if (!cache) cache = saturation(IdealHandle(ring, {}), maximal_ideal(ring));
  return *cache;
}

// Samples k-minors in a deterministic pseudo-random order, in growing batches,
// until the ideal they generate is m-primary or the unit ideal.
struct PrimarySample {
  bool success = false;
  bool exhausted = false;
  std::vector<Polynomial> minors;
  std::size_t used = 0;
};

PrimarySample sample_m_primary(const PolyMatrix& a, std::size_t k, const RingPtr& ring, std::size_t budget) {
  PrimarySample out;
  MinorEngine eng(a, *ring);
  if (k == 0) {
    out.success = true;
    out.minors.push_back(Polynomial::constant(1));
    return out;
  }
  if (k > eng.rows() || k > eng.cols()) return out;
  std::size_t total = eng.count(k);
  auto order = eng.sample_order(k, std::min(total, budget), 20240611u);
  std::size_t next_check = 8;
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    Polynomial d = eng.minor(order[idx].first, order[idx].second);
    ++out.used;
    if (!d.is_zero()) {
      if (d.is_constant()) {
        out.success = true;
        out.minors = {Polynomial::constant(1)};
        return out;
      }
      out.minors.push_back(d);
    }
    bool last = idx + 1 == order.size();
    if ((out.used >= next_check || last) && !out.minors.empty()) {
      IdealHandle id(ring, out.minors);
      if (id.is_unit() || is_m_primary(id)) {
        out.success = true;
        return out;
      }
      next_check *= 2;
    }
  }
  out.exhausted = total > budget;
  return out;
}

bool outside_prime(const std::vector<Polynomial>& gens, const IdealHandle& p) {
  for (const auto& f : gens)
    if (!p.contains(f)) return true;
  return false;
}

}  // namespace

RankCertificate rank_punctured_certificate(const GradedModule& m, int t,
                                           const std::vector<std::pair<std::string, IdealHandle>>& witness_primes,
                                           const FittingLimits& limits) {
  require(t >= 0, ErrorKind::Precondition, "rank certificate: t must be non-negative");
  RankCertificate cert;
  cert.t = t;
  GradedModule p = minimal_presentation(m).module;
  const auto& ring = p.ring();
  const PolyMatrix& a = p.relations();
  long g = static_cast<long>(p.num_generators());

  // (b) Fitt_t = I_{g-t}(A) is m-primary or the unit ideal
  PrimarySample top;
  if (g - t <= 0) {
    top.success = true;
    top.minors = {Polynomial::constant(1)};
  } else {
    top = sample_m_primary(a, static_cast<std::size_t>(g - t), ring, limits.max_minors);
  }
  cert.fitt_t_m_primary = top.success;
  cert.minors_used += top.used;

  // (a) Fitt_{t-1} = I_{g-t+1}(A) lies in H^0_m(R)
  std::optional<IdealHandle> h0;
  std::vector<Polynomial> low_killers;  // elements whose product with Fitt_{t-1} vanishes
  long k_low = g - t + 1;
  MinorEngine eng(a, *ring);
  if (t == 0 || k_low > static_cast<long>(eng.rows()) || k_low > static_cast<long>(eng.cols())) {
    cert.fitt_low_zero = true;
    cert.method_low = "minors";
    low_killers = {Polynomial::constant(1)};
  } else if (eng.count(static_cast<std::size_t>(k_low)) <= 2000) {
    cert.method_low = "minors";
    const IdealHandle& sat = zero_ideal_saturation(ring, h0);
    bool ok = true;
    eng.for_each(static_cast<std::size_t>(k_low), [&](const Polynomial& d) {
      ++cert.minors_used;
      if (!sat.contains(d)) ok = false;
      return ok;
    });
    cert.fitt_low_zero = ok;
    if (ok) low_killers = maximal_ideal(ring).generators();
  } else {
    // W spans the syzygies of A^T, so W^T A = 0 and I_t(W) I_{g-t+1}(A) = 0.
    cert.method_low = "dual-witness";
    PolyMatrix w = syzygies(*ring, transpose(a));
    PrimarySample dual = sample_m_primary(w, static_cast<std::size_t>(t), ring, limits.max_minors);
    cert.minors_used += dual.used;
    cert.fitt_low_zero = dual.success;
    low_killers = dual.minors;
  }

  cert.pass = cert.fitt_low_zero && cert.fitt_t_m_primary;
  if (!cert.fitt_t_m_primary)
    cert.reason = top.exhausted ? "Fitt_t certification exceeded the minor budget" : "Fitt_t is not m-primary";
  else if (!cert.fitt_low_zero)
    cert.reason = "Fitt_{t-1} is not supported at the maximal ideal";

  for (const auto& [name, prime] : witness_primes) {
    WitnessCheck w;
    w.name = name;
    w.fitt_t_not_contained = outside_prime(top.minors, prime);
    w.fitt_low_locally_zero = cert.fitt_low_zero && outside_prime(low_killers, prime);
    w.local_rank = (w.fitt_t_not_contained && w.fitt_low_locally_zero) ? t : -1;
    if (!(w.fitt_t_not_contained && w.fitt_low_locally_zero)) {
      cert.pass = false;
      if (cert.reason.empty()) cert.reason = "witness prime " + name + " failed";
    }
    cert.witnesses.push_back(std::move(w));
  }
  return cert;
}

int local_rank_at(const GradedModule& m, const IdealHandle& prime, const FittingLimits& limits) {
  GradedModule p = minimal_presentation(m).module;
  MinorEngine eng(p.relations(), p.r());
  long g = static_cast<long>(p.num_generators());
  for (std::size_t k = std::min(eng.rows(), eng.cols()); k >= 1; --k) {
    require(eng.count(k) <= limits.max_minors, ErrorKind::Precondition, "local_rank_at: minor budget exceeded");
    bool found = false;
    eng.for_each(k, [&](const Polynomial& d) {
      if (!prime.contains(d)) found = true;
      return !found;
    });
    if (found) return static_cast<int>(g - static_cast<long>(k));
  }
  return static_cast<int>(g);
}

}  // namespace bigindec
