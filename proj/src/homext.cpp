#include "bigindec/homext.hpp"

#include <map>

namespace bigindec {

namespace {

using SlotIndex = std::map<std::pair<std::uint64_t, std::uint32_t>, std::size_t>;

SlotIndex index_of(const std::vector<std::pair<Monomial, std::uint32_t>>& basis) {
  SlotIndex idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx[{basis[i].first.exps, basis[i].second}] = i;
  return idx;
}

// Element of N given by the k-column of a matrix entry list: sum_k p_k e_k.
ModVec column_element(const PolyMatrix& m, std::size_t j, const GradedModule& n) {
  std::vector<VecTerm> terms;
  for (std::size_t k = 0; k < m.rows(); ++k)
    for (const auto& t : m.at(k, j).terms())
      terms.push_back({t.mon, static_cast<std::uint32_t>(k), t.mon.degree + n.degrees()[k], t.coeff});
  return vec_from_terms(std::move(terms), n.r().field());
}

ModVec monomial_element(const Polynomial& p, const Monomial& mu, std::uint32_t k, const GradedModule& n) {
  return mul_term(embed(p, k, n.degrees()[k]), mu, 1, n.r().field());
}

// Writes the normal form of v (an element of N of the slot's degree) into out.
void scatter(const ModVec& v, const GradedModule& n, const SlotIndex& idx, std::size_t offset,
             std::vector<Coeff>& out, const PrimeField& f) {
  ModVec r = n.normal_form(v);
  for (const auto& t : r.terms()) {
    auto it = idx.find({t.mon.exps, t.comp});
    require(it != idx.end(), ErrorKind::Internal, "scatter: normal form outside the graded piece");
    out[offset + it->second] = f.add(out[offset + it->second], t.coeff);
  }
}

PolyMatrix matrix_from_slots(const std::vector<Coeff>& v,
                             const std::vector<std::vector<std::pair<Monomial, std::uint32_t>>>& slots,
                             const std::vector<std::size_t>& offsets, const std::vector<std::int32_t>& row_degrees,
                             const std::vector<std::int32_t>& col_degrees, const PrimeField& f) {
  std::vector<std::vector<std::vector<PolyTerm>>> acc(col_degrees.size(),
                                                      std::vector<std::vector<PolyTerm>>(row_degrees.size()));
  for (std::size_t j = 0; j < slots.size(); ++j)
    for (std::size_t q = 0; q < slots[j].size(); ++q) {
      Coeff c = v[offsets[j] + q];
      if (c == 0) continue;
      acc[j][slots[j][q].second].push_back({slots[j][q].first, c});
    }
  PolyMatrix m(row_degrees, col_degrees);
  for (std::size_t j = 0; j < col_degrees.size(); ++j)
    for (std::size_t k = 0; k < row_degrees.size(); ++k)
      m.at(k, j) = Polynomial::from_terms(std::move(acc[j][k]), f);
  return m;
}

std::vector<std::int32_t> plus(std::vector<std::int32_t> v, std::int32_t d) {
  for (auto& x : v) x += d;
  return v;
}

}  // namespace

GradedModule hom_free_module(const std::vector<std::int32_t>& free_degrees, const GradedModule& n) {
  std::vector<std::int32_t> degs;
  std::vector<PolyMatrix> blocks;
  for (auto a : free_degrees) {
    for (auto b : n.degrees()) degs.push_back(b - a);
    blocks.push_back(n.relations().shifted(-a));
  }
  PolyMatrix rel = blocks.empty() ? PolyMatrix(degs, {}) : block_diagonal(blocks);
  PolyMatrix fixed(degs, rel.col_degrees());
  for (std::size_t i = 0; i < rel.rows(); ++i)
    for (std::size_t j = 0; j < rel.cols(); ++j) fixed.at(i, j) = rel.at(i, j);
  return GradedModule(n.ring(), degs, fixed);
}

PolyMatrix hom_free_map(const PolyMatrix& d, const GradedModule& n) {
  std::size_t nn = n.num_generators();
  std::vector<std::int32_t> rows, cols;
  for (auto c : d.col_degrees())
    for (auto b : n.degrees()) rows.push_back(b - c);
  for (auto a : d.row_degrees())
    for (auto b : n.degrees()) cols.push_back(b - a);
  PolyMatrix m(rows, cols);
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (d.at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < nn; ++k) m.at(j * nn + k, i * nn + k) = d.at(i, j);
    }
  return m;
}

ModVec flatten_map(const PolyMatrix& matrix, std::int32_t shift, const GradedModule& n) {
  std::size_t nn = n.num_generators();
  std::vector<VecTerm> terms;
  for (std::size_t i = 0; i < matrix.cols(); ++i) {
    std::int32_t a = matrix.col_degrees()[i] - shift;
    for (std::size_t k = 0; k < matrix.rows(); ++k)
      for (const auto& t : matrix.at(k, i).terms())
        terms.push_back({t.mon, static_cast<std::uint32_t>(i * nn + k), t.mon.degree + n.degrees()[k] - a, t.coeff});
  }
  return vec_from_terms(std::move(terms), n.r().field());
}

PolyMatrix unflatten_map(const ModVec& flat, const std::vector<std::int32_t>& free_degrees, std::int32_t shift,
                         const GradedModule& n) {
  std::size_t nn = n.num_generators();
  std::vector<std::vector<std::vector<PolyTerm>>> acc(free_degrees.size(), std::vector<std::vector<PolyTerm>>(nn));
  for (const auto& t : flat.terms()) acc[t.comp / nn][t.comp % nn].push_back({t.mon, t.coeff});
  PolyMatrix m(n.degrees(), plus(free_degrees, shift));
  for (std::size_t i = 0; i < free_degrees.size(); ++i)
    for (std::size_t k = 0; k < nn; ++k) m.at(k, i) = Polynomial::from_terms(std::move(acc[i][k]), n.r().field());
  return m;
}

ModuleMap HomModule::decode(std::size_t j) const { return decode(module.generator(j), module.degrees()[j]); }

ModuleMap HomModule::decode(const ModVec& element, std::int32_t shift) const {
  ModVec flat_v = apply(sub.inclusion, element, flat.r());
  PolyMatrix m = unflatten_map(flat_v, source.degrees(), shift, target);
  return ModuleMap::make(source, target, m, shift, false);
}

ModVec HomModule::encode(const ModuleMap& f) const {
  auto c = sub.lift(flatten_map(f.matrix, f.shift, target));
  require(c.has_value(), ErrorKind::Internal, "HomModule::encode: map is not a homomorphism");
  return *c;
}

HomModule hom_module(const GradedModule& m, const GradedModule& n) {
  require(m.ring().get() == n.ring().get(), ErrorKind::RingMismatch, "hom_module: ring mismatch");
  HomModule h;
  h.source = m;
  h.target = n;
  h.flat = hom_free_module(m.degrees(), n);
  GradedModule flat1 = hom_free_module(m.relations().col_degrees(), n);
  PolyMatrix psi = hom_free_map(m.relations(), n);
  ModuleMap to1 = ModuleMap::make(h.flat, flat1, psi, 0, false);
  PolyMatrix k = kernel_generators(to1);
  h.sub = subquotient(m.ring(), h.flat.degrees(), k, h.flat.relations());
  h.module = h.sub.module;
  return h;
}

ModVec EndAlgebra::multiply(const ModVec& x, const ModVec& y) const {
  const auto& f = hom.module.r().field();
  ModVec acc;
  for (const auto& s : x.terms())
    for (const auto& t : y.terms())
      acc = add(acc, mul_term(table[s.comp][t.comp], s.mon * t.mon, f.mul(s.coeff, t.coeff), f), f);
  return hom.module.normal_form(acc);
}

EndAlgebra end_algebra(const GradedModule& m) {
  require(!m.is_zero(), ErrorKind::Precondition, "end_algebra: zero module");
  EndAlgebra e;
  e.hom = hom_module(m, m);
  std::vector<ModuleMap> gens;
  for (std::size_t a = 0; a < e.hom.size(); ++a) gens.push_back(e.hom.decode(a));
  e.table.assign(gens.size(), std::vector<ModVec>(gens.size()));
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = 0; b < gens.size(); ++b)
      e.table[a][b] = e.hom.module.normal_form(e.hom.encode(compose(gens[a], gens[b])));
  e.unit = e.hom.module.normal_form(e.hom.encode(ModuleMap::identity(m)));
  return e;
}

bool end_algebra_associative(const EndAlgebra& e) {
  const auto& f = e.hom.module.r().field();
  for (std::size_t a = 0; a < e.h(); ++a)
    for (std::size_t b = 0; b < e.h(); ++b)
      for (std::size_t c = 0; c < e.h(); ++c) {
        ModVec xa = e.hom.module.generator(a), xb = e.hom.module.generator(b), xc = e.hom.module.generator(c);
        ModVec l = e.multiply(e.multiply(xa, xb), xc);
        ModVec r = e.multiply(xa, e.multiply(xb, xc));
        if (!e.hom.module.is_zero_element(add(l, scale(r, f.neg(1), f), f))) return false;
      }
  return true;
}

ExtClass ExtClass::make(GradedModule m, GradedModule n, PolyMatrix cocycle, std::int32_t degree, bool validate) {
  require(m.ring().get() == n.ring().get(), ErrorKind::RingMismatch, "ExtClass: ring mismatch");
  require(cocycle.rows() == n.num_generators() && cocycle.cols() == m.relations().cols(), ErrorKind::Input,
          "ExtClass: cocycle shape mismatch");
  PolyMatrix c(n.degrees(), plus(m.relations().col_degrees(), degree));
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) c.at(i, j) = n.r().reduce(cocycle.at(i, j));
  require(c.is_homogeneous(), ErrorKind::Input, "ExtClass: cocycle is not homogeneous");
  ExtClass e{std::move(m), std::move(n), std::move(c), degree};
  if (validate) require(e.is_cocycle(), ErrorKind::Input, "ExtClass: matrix is not a cocycle");
  return e;
}

ExtClass ExtClass::zero(const GradedModule& m, const GradedModule& n, std::int32_t degree) {
  return make(m, n, PolyMatrix(n.degrees(), plus(m.relations().col_degrees(), degree)), degree, false);
}

bool ExtClass::is_cocycle() const {
  const PolyMatrix& d2 = source.relation_syzygies();
  PolyMatrix img = multiply(cocycle, d2, target.r());
  for (std::size_t j = 0; j < img.cols(); ++j)
    if (!target.is_zero_element(column_element(img, j, target))) return false;
  return true;
}

ExtClass ExtClass::regraded(std::int32_t d) const {
  return make(source.shifted(d), target, cocycle, degree - d, false);
}

ExtClass add(const ExtClass& a, const ExtClass& b) {
  require(a.degree == b.degree, ErrorKind::Internal, "ExtClass sum: degree mismatch");
  return ExtClass::make(a.source, a.target, add(a.cocycle, b.cocycle, a.target.r()), a.degree, false);
}

ExtClass scale(const ExtClass& a, Coeff c) {
  return ExtClass::make(a.source, a.target, scale(a.cocycle, c, a.target.r()), a.degree, false);
}

PolyMatrix lift_to_relations(const ModuleMap& f) {
  const GradedModule& m = f.target;
  PolyMatrix p = multiply(f.matrix, f.source.relations(), m.r());
  std::vector<ModVec> cols;
  for (std::size_t j = 0; j < p.cols(); ++j) {
    auto c = m.relation_lifter().lift(p.column(j));
    require(c.has_value(), ErrorKind::Internal, "lift_to_relations: map does not respect relations");
    cols.push_back(*c);
  }
  std::vector<std::int32_t> cd = plus(f.source.relations().col_degrees(), f.shift);
  return reduce_entries(PolyMatrix::from_columns(cols, m.relations().col_degrees(), cd), m.r());
}

ExtClass ext_action(const ExtClass& alpha, const ModuleMap& f) {
  require(f.target.num_generators() == alpha.source.num_generators() &&
              f.target.relations().cols() == alpha.source.relations().cols(),
          ErrorKind::Input, "ext_action: map target is not the source of the class");
  PolyMatrix b1 = lift_to_relations(f);
  PolyMatrix c = multiply(alpha.cocycle, b1, alpha.target.r());
  return ExtClass::make(f.source, alpha.target, c, alpha.degree + f.shift, false);
}

bool ext_class_equal(const ExtClass& a, const ExtClass& b) {
  require(a.source.num_generators() == b.source.num_generators() &&
              a.cocycle.rows() == b.cocycle.rows() && a.cocycle.cols() == b.cocycle.cols(),
          ErrorKind::Input, "ext_class_equal: classes over different module pairs");
  const auto& n = a.target;
  const auto& f = n.r().field();
  PolyMatrix d = add(a.cocycle, scale(b.cocycle, f.neg(1), n.r()), n.r());
  if (d.is_zero()) return true;
  if (a.degree != b.degree) return false;
  ModVec flat = flatten_map(d, a.degree, n);
  GradedModule flat1 = hom_free_module(a.source.relations().col_degrees(), n);
  PolyMatrix cob = hom_free_map(a.source.relations(), n);
  ModuleGB gb = submodule_gb(n.r(), flat1.degrees(), concat_columns(flat1.relations(), cob));
  return gb.contains(flat);
}

ExtSpace::ExtSpace(GradedModule m, GradedModule n) : m_(std::move(m)), n_(std::move(n)) {
  require(m_.ring().get() == n_.ring().get(), ErrorKind::RingMismatch, "ExtSpace: ring mismatch");
  LengthData ld = length_and_hilbert(n_);
  require(ld.finite, ErrorKind::NotFiniteLength, "ExtSpace: target module is not of finite length");
  if (ld.hilbert.empty() || m_.relations().cols() == 0) return;
  const auto& f = n_.r().field();
  std::int32_t emin = ld.hilbert.begin()->first, emax = ld.hilbert.rbegin()->first;
  const PolyMatrix& d1 = m_.relations();
  const PolyMatrix& d2 = m_.relation_syzygies();
  const auto& c1 = d1.col_degrees();
  const auto& c0 = m_.degrees();
  const auto& c2 = d2.col_degrees();
  std::int32_t cmin = *std::min_element(c1.begin(), c1.end());
  std::int32_t cmax = *std::max_element(c1.begin(), c1.end());
  dmin_ = emin - cmax;
  dmax_ = emax - cmin;
  for (std::int32_t delta = dmin_; delta <= dmax_; ++delta) {
    Piece p;
    p.degree = delta;
    std::vector<SlotIndex> idx;
    for (std::size_t j = 0; j < c1.size(); ++j) {
      p.offsets.push_back(p.size);
      p.slot_basis.push_back(graded_piece_basis(n_, c1[j] + delta));
      idx.push_back(index_of(p.slot_basis.back()));
      p.size += p.slot_basis.back().size();
    }
    if (p.size == 0) continue;
    // cocycle condition: u o d2 = 0
    std::vector<std::vector<std::pair<Monomial, std::uint32_t>>> tb;
    std::vector<SlotIndex> tidx;
    std::vector<std::size_t> toff;
    std::size_t tsize = 0;
    for (std::size_t l = 0; l < c2.size(); ++l) {
      toff.push_back(tsize);
      tb.push_back(graded_piece_basis(n_, c2[l] + delta));
      tidx.push_back(index_of(tb.back()));
      tsize += tb.back().size();
    }
    DenseMatrix z(tsize, p.size);
    for (std::size_t j = 0; j < c1.size(); ++j)
      for (std::size_t q = 0; q < p.slot_basis[j].size(); ++q) {
        std::vector<Coeff> col(tsize, 0);
        const auto& [mu, k] = p.slot_basis[j][q];
        for (std::size_t l = 0; l < c2.size(); ++l) {
          if (d2.at(j, l).is_zero() || tb[l].empty()) continue;
          scatter(monomial_element(d2.at(j, l), mu, k, n_), n_, tidx[l], toff[l], col, f);
        }
        for (std::size_t r = 0; r < tsize; ++r) z(r, p.offsets[j] + q) = col[r];
      }
    auto zbasis = tsize == 0 ? std::vector<std::vector<Coeff>>{} : kernel(z, f);
    if (tsize == 0) {
      for (std::size_t c = 0; c < p.size; ++c) {
        std::vector<Coeff> e(p.size, 0);
        e[c] = 1;
        zbasis.push_back(std::move(e));
      }
    }
    // coboundaries: v o d1
    SubspaceBasis bnd(p.size, f);
    for (std::size_t i = 0; i < c0.size(); ++i) {
      for (const auto& [mu, k] : graded_piece_basis(n_, c0[i] + delta)) {
        std::vector<Coeff> v(p.size, 0);
        for (std::size_t j = 0; j < c1.size(); ++j) {
          if (d1.at(i, j).is_zero() || p.slot_basis[j].empty()) continue;
          scatter(monomial_element(d1.at(i, j), mu, k, n_), n_, idx[j], p.offsets[j], v, f);
        }
        bnd.insert(std::move(v));
      }
    }
    SubspaceBasis span = bnd;
    std::vector<std::vector<Coeff>> reps;
    for (auto& zv : zbasis)
      if (span.insert(zv)) reps.push_back(zv);
    if (reps.empty()) continue;
    p.first_class = basis_.size();
    p.num_classes = reps.size();
    p.reps_then_boundaries = DenseMatrix(p.size, reps.size() + bnd.size());
    for (std::size_t c = 0; c < reps.size(); ++c)
      for (std::size_t r = 0; r < p.size; ++r) p.reps_then_boundaries(r, c) = reps[c][r];
    for (std::size_t c = 0; c < bnd.size(); ++c)
      for (std::size_t r = 0; r < p.size; ++r) p.reps_then_boundaries(r, reps.size() + c) = bnd.rows()[c][r];
    for (const auto& rv : reps) {
      PolyMatrix u = matrix_from_slots(rv, p.slot_basis, p.offsets, n_.degrees(), plus(c1, delta), f);
      basis_.push_back(ExtClass::make(m_, n_, u, delta, false));
    }
    pieces_.push_back(std::move(p));
  }
}

const ExtSpace::Piece* ExtSpace::find_piece(std::int32_t d) const {
  for (const auto& p : pieces_)
    if (p.degree == d) return &p;
  return nullptr;
}

std::vector<Coeff> ExtSpace::piece_vector(const Piece& p, const PolyMatrix& cocycle) const {
  const auto& f = n_.r().field();
  std::vector<Coeff> v(p.size, 0);
  for (std::size_t j = 0; j < cocycle.cols(); ++j) {
    if (p.slot_basis[j].empty()) continue;
    scatter(column_element(cocycle, j, n_), n_, index_of(p.slot_basis[j]), p.offsets[j], v, f);
  }
  return v;
}

std::vector<Coeff> ExtSpace::coordinates(const ExtClass& c) const {
  std::vector<Coeff> out(basis_.size(), 0);
  const Piece* p = find_piece(c.degree);
  if (p == nullptr) return out;
  auto x = solve(p->reps_then_boundaries, piece_vector(*p, c.cocycle), n_.r().field());
  require(x.has_value(), ErrorKind::Input, "ExtSpace::coordinates: not a cocycle");
  for (std::size_t i = 0; i < p->num_classes; ++i) out[p->first_class + i] = (*x)[i];
  return out;
}

bool ExtSpace::is_zero(const ExtClass& c) const {
  for (auto x : coordinates(c))
    if (x != 0) return false;
  return true;
}

ExtClass ExtModule::decode(std::size_t j, const GradedModule& n) const {
  require(i == 1, ErrorKind::Internal, "ExtModule::decode: only for Ext^1");
  std::int32_t d = module.degrees()[j];
  ModVec flat_v = sub.inclusion.column(j);
  PolyMatrix u = unflatten_map(flat_v, resolution.free_degrees[1], d, n);
  return ExtClass::make(resolution.module, n, u, d, false);
}

namespace {

struct Cohomology {
  GradedModule flat;
  PolyMatrix cycles;
  PolyMatrix boundaries_and_relations;
};

Cohomology cohomology_data(const Resolution& res, const GradedModule& n, int i) {
  require(res.length() >= static_cast<std::size_t>(i) + 1, ErrorKind::Internal, "Ext: resolution too short");
  Cohomology c;
  c.flat = hom_free_module(res.free_degrees[i], n);
  GradedModule next = hom_free_module(res.free_degrees[i + 1], n);
  PolyMatrix psi = hom_free_map(res.differentials[i], n);
  c.cycles = kernel_generators(ModuleMap::make(c.flat, next, psi, 0, false));
  c.boundaries_and_relations = c.flat.relations();
  if (i >= 1) c.boundaries_and_relations = concat_columns(c.flat.relations(), hom_free_map(res.differentials[i - 1], n));
  return c;
}

}  // namespace

ExtModule ext_module(const GradedModule& m, const GradedModule& n, int i) {
  require(i >= 0, ErrorKind::Precondition, "ext_module: negative index");
  require(m.ring().get() == n.ring().get(), ErrorKind::RingMismatch, "ext_module: ring mismatch");
  ExtModule e;
  e.i = i;
  e.resolution = free_resolution(m, static_cast<std::size_t>(i) + 1);
  Cohomology c = cohomology_data(e.resolution, n, i);
  e.flat = c.flat;
  e.sub = subquotient(m.ring(), c.flat.degrees(), c.cycles, c.boundaries_and_relations);
  e.module = e.sub.module;
  if (i == 1 && length_and_hilbert(n).finite) e.space.emplace(e.resolution.module, n);
  return e;
}

bool ext_vanishes(const Resolution& res, const GradedModule& n, int i) {
  Cohomology c = cohomology_data(res, n, i);
  ModuleGB gb = submodule_gb(n.r(), c.flat.degrees(), c.boundaries_and_relations);
  for (const auto& col : c.cycles.columns())
    if (!gb.contains(col)) return false;
  return true;
}

int depth(const GradedModule& m) {
  require(!m.is_zero(), ErrorKind::Precondition, "depth: zero module");
  int d = m.r().krull_dim();
  Resolution res = free_resolution(residue_field(m.ring()), static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i)
    if (!ext_vanishes(res, m, i)) return i;
  fail(ErrorKind::Internal, "depth: Ext^i(k, M) vanishes for all i <= dim R");
}

bool killed_by_power(const GradedModule& e, int s) {
  const auto& f = e.r().field();
  auto mons = e.r().monomials_of_standard_degree(s);
  for (std::size_t c = 0; c < e.num_generators(); ++c)
    for (const auto& mu : mons)
      if (!e.is_zero_element(mul_term(e.generator(c), mu, 1, f))) return false;
  return true;
}

int annihilator_exponent(const GradedModule& m) {
  GradedModule omega = syzygy(m, 1);
  if (omega.num_generators() == 0) return 0;
  ExtModule e = ext_module(m, omega, 1);
  require(length_and_hilbert(e.module).finite, ErrorKind::NotFiniteLength,
          "Ext^1(M, Omega^1 M) is not of finite length: M is not free on the punctured spectrum");
  if (e.module.is_zero()) return 0;
  for (int s = 1; s < 4 * kMaxExponent; ++s)
    if (killed_by_power(e.module, s)) return s;
  fail(ErrorKind::Internal, "annihilator_exponent: no power of m kills a finite-length module");
}

HomDegree0::HomDegree0(GradedModule m, GradedModule n) : m_(std::move(m)), n_(std::move(n)) {
  require(m_.ring().get() == n_.ring().get(), ErrorKind::RingMismatch, "HomDegree0: ring mismatch");
  const auto& f = n_.r().field();
  for (auto a : m_.degrees()) {
    offsets_.push_back(raw_size_);
    slot_basis_.push_back(graded_piece_basis(n_, a));
    raw_size_ += slot_basis_.back().size();
  }
  const PolyMatrix& d1 = m_.relations();
  std::vector<std::vector<std::pair<Monomial, std::uint32_t>>> tb;
  std::vector<SlotIndex> tidx;
  std::vector<std::size_t> toff;
  std::size_t tsize = 0;
  for (auto c : d1.col_degrees()) {
    toff.push_back(tsize);
    tb.push_back(graded_piece_basis(n_, c));
    tidx.push_back(index_of(tb.back()));
    tsize += tb.back().size();
  }
  DenseMatrix cons(tsize, raw_size_);
  for (std::size_t i = 0; i < slot_basis_.size(); ++i)
    for (std::size_t q = 0; q < slot_basis_[i].size(); ++q) {
      std::vector<Coeff> col(tsize, 0);
      const auto& [mu, k] = slot_basis_[i][q];
      for (std::size_t j = 0; j < d1.cols(); ++j) {
        if (d1.at(i, j).is_zero() || tb[j].empty()) continue;
        scatter(monomial_element(d1.at(i, j), mu, k, n_), n_, tidx[j], toff[j], col, f);
      }
      for (std::size_t r = 0; r < tsize; ++r) cons(r, offsets_[i] + q) = col[r];
    }
  std::vector<char> pivot(raw_size_, 0);
  std::vector<std::vector<Coeff>> kb;
  if (tsize > 0) {
    Echelon e = rref(cons, f);
    for (auto pc : e.pivots) pivot[pc] = 1;
    kb = kernel(cons, f);
  } else {
    for (std::size_t c = 0; c < raw_size_; ++c) {
      std::vector<Coeff> v(raw_size_, 0);
      v[c] = 1;
      kb.push_back(std::move(v));
    }
  }
  for (std::size_t c = 0; c < raw_size_; ++c)
    if (!pivot[c]) free_columns_.push_back(c);
  require(free_columns_.size() == kb.size(), ErrorKind::Internal, "HomDegree0: kernel bookkeeping mismatch");
  raw_basis_ = DenseMatrix(kb.size(), raw_size_);
  for (std::size_t b = 0; b < kb.size(); ++b) {
    for (std::size_t c = 0; c < raw_size_; ++c) raw_basis_(b, c) = kb[b][c];
    PolyMatrix mat = matrix_from_slots(kb[b], slot_basis_, offsets_, n_.degrees(), m_.degrees(), f);
    basis_.push_back(ModuleMap::make(m_, n_, mat, 0, false));
  }
}

std::vector<Coeff> HomDegree0::raw_vector(const ModuleMap& g) const {
  const auto& f = n_.r().field();
  std::vector<Coeff> v(raw_size_, 0);
  for (std::size_t i = 0; i < g.matrix.cols(); ++i) {
    if (slot_basis_[i].empty()) continue;
    scatter(column_element(g.matrix, i, n_), n_, index_of(slot_basis_[i]), offsets_[i], v, f);
  }
  return v;
}

std::vector<Coeff> HomDegree0::coordinates(const ModuleMap& g) const {
  require(g.shift == 0, ErrorKind::Internal, "HomDegree0::coordinates: map is not of degree 0");
  std::vector<Coeff> raw = raw_vector(g);
  std::vector<Coeff> c(free_columns_.size());
  for (std::size_t b = 0; b < free_columns_.size(); ++b) c[b] = raw[free_columns_[b]];
  return c;
}

ModuleMap HomDegree0::combination(const std::vector<Coeff>& c) const {
  const auto& f = n_.r().field();
  std::vector<Coeff> v(raw_size_, 0);
  for (std::size_t b = 0; b < c.size(); ++b)
    if (c[b] != 0)
      for (std::size_t k = 0; k < raw_size_; ++k) v[k] = f.add(v[k], f.mul(c[b], raw_basis_(b, k)));
  PolyMatrix mat = matrix_from_slots(v, slot_basis_, offsets_, n_.degrees(), m_.degrees(), f);
  return ModuleMap::make(m_, n_, mat, 0, false);
}

}  // namespace bigindec
