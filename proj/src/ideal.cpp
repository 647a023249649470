#include "bigindec/ideal.hpp"

#include <map>

namespace bigindec {

namespace {

ModuleGBInput ideal_input(const std::vector<Polynomial>& gens) {
  ModuleGBInput in;
  in.component_degrees = {0};
  for (const auto& g : gens) {
    require(g.is_homogeneous(), ErrorKind::Input, "ideal generator is not homogeneous");
    if (g.is_zero()) continue;
    in.uncounted.push_back(embed(g, 0, 0));
  }
  return in;
}

}  // namespace

IdealHandle::IdealHandle(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
  for (auto& g : generators_) g = ring_->reduce(g);
  gb_ = ModuleGB(ring_->context(), ideal_input(generators_));
  for (const auto& v : gb_.basis()) {
    Polynomial p = component(v, 0);
    if (!ring_->reduce(p).is_zero()) gb_polys_.push_back(std::move(p));
  }
}

std::vector<Monomial> IdealHandle::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& t : gb_.leads()) out.push_back(t.mon);
  return out;
}

Polynomial IdealHandle::normal_form(const Polynomial& f) const {
  require(f.is_homogeneous(), ErrorKind::Input, "normal_form: input polynomial is not homogeneous");
  return component(gb_.normal_form(embed(f, 0, 0)), 0);
}

bool IdealHandle::contains(const IdealHandle& other) const {
  for (const auto& g : other.groebner_basis())
    if (!contains(g)) return false;
  return true;
}

bool IdealHandle::is_unit() const {
  for (const auto& t : gb_.leads())
    if (t.mon.is_one()) return true;
  return false;
}

int IdealHandle::quotient_dimension() const {
  return monomial_ideal_dimension(leading_monomials(), ring_->num_vars());
}

std::optional<long> IdealHandle::colength() const {
  if (quotient_dimension() > 0) return std::nullopt;
  if (is_unit()) return 0;
  long count = 0;
  for (int d = 0;; ++d) {
    long here = 0;
    for (const auto& m : ring_->monomials_of_degree(d))
      if (!gb_.is_leading(m, 0)) ++here;
    count += here;
    // once a full weight-period of degrees is empty, all higher degrees are too
    bool any_later = false;
    int wmax = *std::max_element(ring_->weights().begin(), ring_->weights().end());
    if (here == 0) {
      for (int e = d + 1; e <= d + wmax && !any_later; ++e)
        for (const auto& m : ring_->monomials_of_degree(e))
          if (!gb_.is_leading(m, 0)) {
            any_later = true;
            break;
          }
      if (!any_later) return count;
    }
  }
}

IdealHandle buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  for (const auto& g : gens)
    require(g.is_homogeneous(), ErrorKind::Input, "buchberger: non-homogeneous generator");
  return IdealHandle(ring, gens);
}

Polynomial normal_form(const RingPtr& ring, const Polynomial& f, const IdealHandle& g) {
  require(ring.get() == g.ring().get(), ErrorKind::RingMismatch, "normal_form: ring mismatch");
  return g.normal_form(f);
}

IdealHandle maximal_ideal(const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (int i = 0; i < ring->num_vars(); ++i) gens.push_back(ring->var(i));
  return IdealHandle(ring, gens);
}

IdealHandle power_of_maximal(const RingPtr& ring, int n) {
  require(n >= 0, ErrorKind::Precondition, "power_of_maximal: negative exponent");
  std::vector<Polynomial> gens;
  for (const auto& m : ring->monomials_of_standard_degree(n)) gens.push_back(Polynomial::monomial(m));
  return IdealHandle(ring, gens);
}

IdealHandle product(const IdealHandle& a, const IdealHandle& b) {
  require(a.ring().get() == b.ring().get(), ErrorKind::RingMismatch, "product: ring mismatch");
  std::vector<Polynomial> gens;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) gens.push_back(a.ring()->multiply(x, y));
  return IdealHandle(a.ring(), gens);
}

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b) {
  require(a.ring().get() == b.ring().get(), ErrorKind::RingMismatch, "ideal_sum: ring mismatch");
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return IdealHandle(a.ring(), gens);
}

IdealHandle quotient(const IdealHandle& i, const IdealHandle& j) {
  require(i.ring().get() == j.ring().get(), ErrorKind::RingMismatch, "quotient: ring mismatch");
  const auto& ring = *i.ring();
  std::vector<Polynomial> js;
  for (const auto& g : j.generators())
    if (!g.is_zero()) js.push_back(g);
  if (js.empty()) return IdealHandle(i.ring(), {Polynomial::constant(1)});
  // kernel of R -> (R/I)^k, 1 -> (j_1, ..., j_k)
  ModuleGBInput in;
  std::vector<VecTerm> v;
  for (std::size_t k = 0; k < js.size(); ++k) {
    in.component_degrees.push_back(-js[k].degree());
    for (const auto& t : js[k].terms()) v.push_back({t.mon, static_cast<std::uint32_t>(k), 0, t.coeff});
  }
  in.counted.push_back(vec_from_terms(std::move(v), ring.field()));
  in.counted_degrees.push_back(0);
  for (std::size_t k = 0; k < js.size(); ++k)
    for (const auto& g : i.groebner_basis())
      in.uncounted.push_back(embed(g, static_cast<std::uint32_t>(k), in.component_degrees[k]));
  in.syzygies = true;
  ModuleGB gb(ring.context(), std::move(in));
  std::vector<Polynomial> gens;
  for (const auto& s : gb.syzygies()) gens.push_back(ring.reduce(component(s, 0)));
  return IdealHandle(i.ring(), gens);
}

IdealHandle saturation(const IdealHandle& i, const IdealHandle& j) {
  IdealHandle cur = i;
  for (;;) {
    IdealHandle next = quotient(cur, j);
    if (cur.contains(next)) return cur;
    cur = std::move(next);
  }
}

bool is_m_primary(const IdealHandle& i) {
  if (i.is_unit()) return false;
  return saturation(i, maximal_ideal(i.ring())).is_unit();
}

int krull_dimension(const GradedRing& ring) { return ring.krull_dim(); }

ModuleGB tracked_gb(const GradedRing& ring, const PolyMatrix& counted, const PolyMatrix& uncounted,
                    bool syz) {
  require(counted.row_degrees() == uncounted.row_degrees() || uncounted.cols() == 0, ErrorKind::Internal,
          "tracked_gb: ambient mismatch");
  ModuleGBInput in;
  in.component_degrees = counted.row_degrees();
  in.counted = counted.columns();
  in.counted_degrees = counted.col_degrees();
  in.uncounted = uncounted.columns();
  in.track = true;
  in.syzygies = syz;
  return ModuleGB(ring.context(), std::move(in));
}

ModuleGB submodule_gb(const GradedRing& ring, const std::vector<std::int32_t>& ambient_degrees,
                      const PolyMatrix& gens) {
  ModuleGBInput in;
  in.component_degrees = ambient_degrees;
  in.uncounted = gens.columns();
  return ModuleGB(ring.context(), std::move(in));
}

std::vector<std::size_t> minimal_columns(const GradedRing& ring, const PolyMatrix& counted,
                                         const PolyMatrix& uncounted) {
  ModuleGBInput in;
  in.component_degrees = counted.row_degrees();
  in.counted = counted.columns();
  in.counted_degrees = counted.col_degrees();
  if (uncounted.cols() > 0) {
    require(uncounted.row_degrees() == counted.row_degrees(), ErrorKind::Internal,
            "minimal_columns: ambient mismatch");
    in.uncounted = uncounted.columns();
  }
  ModuleGB gb(ring.context(), std::move(in));
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < gb.minimal().size(); ++j)
    if (gb.minimal()[j]) idx.push_back(j);
  return idx;
}

PolyMatrix relative_syzygies(const GradedRing& ring, const std::vector<std::int32_t>& ambient_degrees,
                             const PolyMatrix& counted, const PolyMatrix& uncounted) {
  PolyMatrix unc = uncounted.cols() > 0 ? uncounted : PolyMatrix(ambient_degrees, {});
  PolyMatrix cnt = counted.cols() > 0 ? counted : PolyMatrix(ambient_degrees, {});
  ModuleGB gb = tracked_gb(ring, cnt, unc, true);
  std::vector<std::int32_t> degs;
  std::vector<ModVec> cols;
  for (const auto& s : gb.syzygies()) {
    cols.push_back(s);
    degs.push_back(s.degree());
  }
  // the syzygy vectors live in the free module on the counted generators
  PolyMatrix raw = reduce_entries(PolyMatrix::from_columns(cols, counted.col_degrees(), degs), ring);
  // drop columns that became zero after reduction modulo I
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j < raw.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < raw.rows() && zero; ++i) zero = raw.at(i, j).is_zero();
    if (!zero) nz.push_back(j);
  }
  raw = raw.select_columns(nz);
  PolyMatrix none(raw.row_degrees(), {});
  return raw.select_columns(minimal_columns(ring, raw, none));
}

PolyMatrix syzygies(const GradedRing& ring, const PolyMatrix& m) {
  require(m.is_homogeneous(), ErrorKind::Input, "syzygies: degree-inconsistent matrix");
  return relative_syzygies(ring, m.row_degrees(), m, PolyMatrix(m.row_degrees(), {}));
}

}  // namespace bigindec
