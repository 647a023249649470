#include "bigindec/oracle.hpp"

#include <map>
#include <random>
#include <unordered_map>

#include "bigindec/univariate.hpp"

namespace bigindec {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

using Column = std::vector<Polynomial>;

// A graded module F0 / (relations + I F0) with pieces built on demand.
class DenseModule {
 public:
  struct Piece {
    std::vector<std::unordered_map<std::uint64_t, std::size_t>> index;  // per component
    std::vector<std::pair<Monomial, std::uint32_t>> ambient;
    std::unique_ptr<SubspaceBasis> relations;
    std::vector<std::size_t> basis;     // ambient positions of the quotient basis
    std::vector<std::size_t> position;  // ambient position -> quotient position or kNone
  };

  DenseModule(const GradedRing& ring, std::vector<std::int32_t> degrees, std::vector<Column> relations,
              std::vector<std::int32_t> relation_degrees)
      : ring_(ring), degrees_(std::move(degrees)), rels_(std::move(relations)), rel_deg_(std::move(relation_degrees)) {}

  static DenseModule of(const GradedModule& m) {
    std::vector<Column> cols;
    for (std::size_t j = 0; j < m.relations().cols(); ++j) {
      Column c;
      for (std::size_t i = 0; i < m.num_generators(); ++i) c.push_back(m.relations().at(i, j));
      cols.push_back(std::move(c));
    }
    return DenseModule(m.r(), m.degrees(), std::move(cols), m.relations().col_degrees());
  }

  const GradedRing& ring() const { return ring_; }
  const std::vector<std::int32_t>& degrees() const { return degrees_; }

  const Piece& piece(std::int32_t d) {
    auto it = pieces_.find(d);
    if (it != pieces_.end()) return it->second;
    const auto& f = ring_.field();
    Piece p;
    p.index.resize(degrees_.size());
    for (std::uint32_t c = 0; c < degrees_.size(); ++c)
      for (const auto& mon : ring_.monomials_of_degree(d - degrees_[c])) {
        p.index[c][mon.exps] = p.ambient.size();
        p.ambient.emplace_back(mon, c);
      }
    p.relations = std::make_unique<SubspaceBasis>(p.ambient.size(), f);
    std::vector<Coeff> v(p.ambient.size());
    for (std::size_t j = 0; j < rels_.size(); ++j)
      for (const auto& mu : ring_.monomials_of_degree(d - rel_deg_[j])) {
        std::fill(v.begin(), v.end(), 0);
        accumulate(p, mu, rels_[j], 1, v);
        p.relations->insert(v);
      }
    for (std::uint32_t c = 0; c < degrees_.size(); ++c)
      for (const auto& g : ring_.defining_ideal())
        for (const auto& mu : ring_.monomials_of_degree(d - degrees_[c] - g.degree())) {
          std::fill(v.begin(), v.end(), 0);
          for (const auto& t : g.terms()) v[p.index[c].at((mu * t.mon).exps)] = f.add(v[p.index[c].at((mu * t.mon).exps)], t.coeff);
          p.relations->insert(v);
        }
    std::vector<char> pivot(p.ambient.size(), 0);
    for (auto q : p.relations->pivots()) pivot[q] = 1;
    p.position.assign(p.ambient.size(), kNone);
    for (std::size_t q = 0; q < p.ambient.size(); ++q)
      if (!pivot[q]) {
        p.position[q] = p.basis.size();
        p.basis.push_back(q);
      }
    return pieces_.emplace(d, std::move(p)).first->second;
  }

  std::size_t dim(std::int32_t d) { return piece(d).basis.size(); }

  // v += c * mu * col, in ambient coordinates of the piece.
  void accumulate(const Piece& p, const Monomial& mu, const Column& col, Coeff c, std::vector<Coeff>& v) const {
    const auto& f = ring_.field();
    for (std::size_t i = 0; i < col.size(); ++i)
      for (const auto& t : col[i].terms()) {
        std::size_t q = p.index[i].at((mu * t.mon).exps);
        v[q] = f.add(v[q], f.mul(c, t.coeff));
      }
  }

  // Quotient coordinates of an ambient vector.
  std::vector<Coeff> coords(std::int32_t d, std::vector<Coeff> v) {
    const Piece& p = piece(d);
    p.relations->reduce(v);
    std::vector<Coeff> out(p.basis.size());
    for (std::size_t k = 0; k < p.basis.size(); ++k) out[k] = v[p.basis[k]];
    return out;
  }

 private:
  const GradedRing& ring_;
  std::vector<std::int32_t> degrees_;
  std::vector<Column> rels_;
  std::vector<std::int32_t> rel_deg_;
  std::map<std::int32_t, Piece> pieces_;
};

Column column_of(const PolyMatrix& m, std::size_t j) {
  Column c;
  for (std::size_t i = 0; i < m.rows(); ++i) c.push_back(m.at(i, j));
  return c;
}

DenseModule truncation(const GradedRing& ring, int n) {
  std::vector<Column> cols;
  std::vector<std::int32_t> degs;
  for (const auto& mu : ring.monomials_of_standard_degree(n)) {
    cols.push_back({Polynomial::monomial(mu)});
    degs.push_back(mu.degree);
  }
  return DenseModule(ring, {0}, std::move(cols), std::move(degs));
}

std::int32_t top_degree(DenseModule& t, int n) {
  // all monomials of standard degree >= n vanish, so the top weighted degree
  // is at most (n - 1) * max weight
  int w = 1;
  for (int x : t.ring().weights()) w = std::max(w, x);
  std::int32_t top = -1;
  for (std::int32_t d = 0; d <= (n - 1) * w; ++d)
    if (t.dim(d) > 0) top = d;
  return top;
}

// An element of N given by quotient coordinates in degree d, written back as
// the image of mu: the ambient vector of mu times that element in degree d + deg mu.
void multiply_into(DenseModule& n, std::int32_t d, const std::vector<Coeff>& x, const Monomial& mu,
                   std::vector<Coeff>& out, Coeff c) {
  const auto& f = n.ring().field();
  const auto& src = n.piece(d);
  const auto& dst = n.piece(d + mu.degree);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] == 0) continue;
    const auto& [mon, comp] = src.ambient[src.basis[k]];
    std::size_t q = dst.index[comp].at((mon * mu).exps);
    out[q] = f.add(out[q], f.mul(c, x[k]));
  }
}

// Linear system for degree-zero maps M -> N: unknowns are the images of the
// generators of M in quotient coordinates of N; rows force the relations of M
// to vanish.
struct MapSystem {
  std::vector<std::size_t> offsets;
  std::size_t unknowns = 0;
  DenseMatrix constraints;
};

MapSystem map_system(DenseModule& m, const GradedModule& mg, DenseModule& n, std::int32_t shift) {
  MapSystem s;
  for (auto a : m.degrees()) {
    s.offsets.push_back(s.unknowns);
    s.unknowns += n.dim(a + shift);
  }
  const PolyMatrix& rel = mg.relations();
  std::vector<std::vector<Coeff>> rows;
  for (std::size_t j = 0; j < rel.cols(); ++j) {
    std::int32_t d = rel.col_degrees()[j] + shift;
    const auto& target = n.piece(d);
    std::size_t amb = target.ambient.size();
    if (amb == 0) continue;
    // column b of the block: image of unknown b in the ambient of N_d
    std::vector<std::vector<Coeff>> image(s.unknowns, std::vector<Coeff>(amb, 0));
    for (std::size_t i = 0; i < rel.rows(); ++i) {
      std::int32_t ai = m.degrees()[i] + shift;
      std::size_t dim_i = n.dim(ai);
      for (const auto& t : rel.at(i, j).terms())
        for (std::size_t k = 0; k < dim_i; ++k) {
          std::vector<Coeff> unit(dim_i, 0);
          unit[k] = 1;
          multiply_into(n, ai, unit, t.mon, image[s.offsets[i] + k], t.coeff);
        }
    }
    std::vector<std::vector<Coeff>> reduced;
    for (auto& col : image) reduced.push_back(n.coords(d, col));
    std::size_t qd = n.dim(d);
    for (std::size_t r = 0; r < qd; ++r) {
      std::vector<Coeff> row(s.unknowns);
      for (std::size_t b = 0; b < s.unknowns; ++b) row[b] = reduced[b][r];
      rows.push_back(std::move(row));
    }
  }
  s.constraints = DenseMatrix(rows.size(), s.unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t b = 0; b < s.unknowns; ++b) s.constraints(r, b) = rows[r][b];
  return s;
}

std::vector<std::vector<Coeff>> solutions(const MapSystem& s, const PrimeField& f) {
  if (s.constraints.rows() == 0) {
    std::vector<std::vector<Coeff>> out;
    for (std::size_t b = 0; b < s.unknowns; ++b) {
      std::vector<Coeff> v(s.unknowns, 0);
      v[b] = 1;
      out.push_back(std::move(v));
    }
    return out;
  }
  return kernel(s.constraints, f);
}

// Composition g o h of degree-zero endomorphisms given by generator images in
// quotient coordinates.
std::vector<Coeff> compose_values(DenseModule& m, const MapSystem& s, const std::vector<Coeff>& g,
                                  const std::vector<Coeff>& h) {
  std::vector<Coeff> out(s.unknowns, 0);
  for (std::size_t i = 0; i < m.degrees().size(); ++i) {
    std::int32_t ai = m.degrees()[i];
    const auto& p = m.piece(ai);
    std::vector<Coeff> amb(p.ambient.size(), 0);
    for (std::size_t k = 0; k < p.basis.size(); ++k) {
      Coeff c = h[s.offsets[i] + k];
      if (c == 0) continue;
      const auto& [mon, comp] = p.ambient[p.basis[k]];
      std::int32_t ac = m.degrees()[comp];
      std::vector<Coeff> gc(g.begin() + static_cast<std::ptrdiff_t>(s.offsets[comp]),
                            g.begin() + static_cast<std::ptrdiff_t>(s.offsets[comp] + m.dim(ac)));
      multiply_into(m, ac, gc, mon, amb, c);
    }
    auto q = m.coords(ai, amb);
    std::copy(q.begin(), q.end(), out.begin() + static_cast<std::ptrdiff_t>(s.offsets[i]));
  }
  return out;
}

PolyMatrix values_to_matrix(DenseModule& target, const std::vector<std::int32_t>& source_degrees,
                            const MapSystem& s, const std::vector<Coeff>& v) {
  const auto& f = target.ring().field();
  PolyMatrix out(target.degrees(), source_degrees);
  for (std::size_t i = 0; i < source_degrees.size(); ++i) {
    const auto& p = target.piece(source_degrees[i]);
    std::vector<std::vector<PolyTerm>> per(target.degrees().size());
    for (std::size_t k = 0; k < p.basis.size(); ++k) {
      Coeff c = v[s.offsets[i] + k];
      if (c == 0) continue;
      const auto& [mon, comp] = p.ambient[p.basis[k]];
      per[comp].push_back({mon, c});
    }
    for (std::size_t r = 0; r < per.size(); ++r) out.at(r, i) = Polynomial::from_terms(std::move(per[r]), f);
  }
  return out;
}

}  // namespace

long oracle_ext_dim(const GradedModule& m, int n) {
  require(n >= 1, ErrorKind::Precondition, "oracle_ext_dim: n must be positive");
  const GradedRing& ring = m.r();
  const auto& f = ring.field();
  DenseModule t = truncation(ring, n);
  std::int32_t top = top_degree(t, n);
  const PolyMatrix& d1 = m.relations();
  if (d1.cols() == 0 || top < 0) return 0;
  DenseModule f0(ring, m.degrees(), {}, {});
  std::vector<Column> cols;
  for (std::size_t j = 0; j < d1.cols(); ++j) cols.push_back(column_of(d1, j));
  const auto& c = d1.col_degrees();
  std::int32_t cmin = *std::min_element(c.begin(), c.end()), cmax = *std::max_element(c.begin(), c.end());

  // kernel of F1 -> F0 over R in degree e, as vectors over (column j, S-monomial)
  std::map<std::int32_t, std::pair<std::vector<std::pair<Monomial, std::size_t>>, std::vector<std::vector<Coeff>>>> ker_cache;
  auto kernel_at = [&](std::int32_t e) -> const auto& {
    auto it = ker_cache.find(e);
    if (it != ker_cache.end()) return it->second;
    std::vector<std::pair<Monomial, std::size_t>> basis;
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& mu : ring.monomials_of_degree(e - c[j])) basis.emplace_back(mu, j);
    const auto& p = f0.piece(e);
    std::size_t q = p.basis.size();
    DenseMatrix a(q, basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b) {
      std::vector<Coeff> amb(p.ambient.size(), 0);
      f0.accumulate(p, basis[b].first, cols[basis[b].second], 1, amb);
      auto v = f0.coords(e, amb);
      for (std::size_t r = 0; r < q; ++r) a(r, b) = v[r];
    }
    std::vector<std::vector<Coeff>> ker;
    if (q == 0) {
      for (std::size_t b = 0; b < basis.size(); ++b) {
        std::vector<Coeff> v(basis.size(), 0);
        v[b] = 1;
        ker.push_back(std::move(v));
      }
    } else if (!basis.empty()) {
      ker = kernel(a, f);
    }
    return ker_cache.emplace(e, std::make_pair(std::move(basis), std::move(ker))).first->second;
  };

  long total = 0;
  for (std::int32_t delta = -cmax; delta <= top - cmin; ++delta) {
    std::vector<std::size_t> off;
    std::size_t unknowns = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      off.push_back(unknowns);
      unknowns += t.dim(c[j] + delta);
    }
    if (unknowns == 0) continue;
    std::vector<std::vector<Coeff>> rows;
    for (std::int32_t e = cmin; e + delta <= top; ++e) {
      std::int32_t d = e + delta;
      if (d < 0 || t.dim(d) == 0) continue;
      const auto& [basis, ker] = kernel_at(e);
      const auto& tp = t.piece(d);
      for (const auto& kv : ker) {
        // ambient image in T_d of each unknown under this kernel vector
        std::vector<std::vector<Coeff>> img(unknowns, std::vector<Coeff>(tp.ambient.size(), 0));
        for (std::size_t b = 0; b < basis.size(); ++b) {
          if (kv[b] == 0) continue;
          std::size_t j = basis[b].second;
          std::int32_t dj = c[j] + delta;
          for (std::size_t k = 0; k < t.dim(dj); ++k) {
            std::vector<Coeff> unit(t.dim(dj), 0);
            unit[k] = 1;
            multiply_into(t, dj, unit, basis[b].first, img[off[j] + k], kv[b]);
          }
        }
        std::vector<std::vector<Coeff>> red;
        for (auto& v : img) red.push_back(t.coords(d, v));
        for (std::size_t r = 0; r < t.dim(d); ++r) {
          std::vector<Coeff> row(unknowns);
          for (std::size_t u = 0; u < unknowns; ++u) row[u] = red[u][r];
          rows.push_back(std::move(row));
        }
      }
    }
    std::size_t hom_dim = unknowns;
    if (!rows.empty()) {
      DenseMatrix cons(rows.size(), unknowns);
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t u = 0; u < unknowns; ++u) cons(r, u) = rows[r][u];
      hom_dim = unknowns - rank(cons, f);
    }
    // coboundaries: v in sum_i T_{a_i + delta}, u_j = sum_i d1_ij v_i
    std::vector<std::vector<Coeff>> cob;
    for (std::size_t i = 0; i < m.num_generators(); ++i) {
      std::int32_t di = m.degrees()[i] + delta;
      if (di < 0 || di > top) continue;
      for (std::size_t k = 0; k < t.dim(di); ++k) {
        std::vector<Coeff> unit(t.dim(di), 0);
        unit[k] = 1;
        std::vector<Coeff> u(unknowns, 0);
        for (std::size_t j = 0; j < cols.size(); ++j) {
          std::int32_t dj = c[j] + delta;
          const auto& pj = t.piece(dj);
          std::vector<Coeff> amb(pj.ambient.size(), 0);
          for (const auto& term : d1.at(i, j).terms()) multiply_into(t, di, unit, term.mon, amb, term.coeff);
          auto q = t.coords(dj, amb);
          std::copy(q.begin(), q.end(), u.begin() + static_cast<std::ptrdiff_t>(off[j]));
        }
        cob.push_back(std::move(u));
      }
    }
    std::size_t cob_rank = 0;
    if (!cob.empty()) {
      DenseMatrix cm(cob.size(), unknowns);
      for (std::size_t r = 0; r < cob.size(); ++r)
        for (std::size_t u = 0; u < unknowns; ++u) cm(r, u) = cob[r][u];
      cob_rank = rank(cm, f);
    }
    total += static_cast<long>(hom_dim - cob_rank);
  }
  return total;
}

long oracle_hom0_dim(const GradedModule& m, const GradedModule& n) {
  DenseModule dm = DenseModule::of(m), dn = DenseModule::of(n);
  MapSystem s = map_system(dm, m, dn, 0);
  return static_cast<long>(solutions(s, n.r().field()).size());
}

SplitVerdict oracle_split_search(const ShortExactSequence& seq) {
  const auto& m = seq.right();
  const auto& x = seq.middle();
  const auto& f = m.r().field();
  DenseModule dm = DenseModule::of(m), dx = DenseModule::of(x);
  MapSystem s = map_system(dm, m, dx, 0);
  auto sols = solutions(s, f);
  SplitVerdict out;
  // pi o sigma = id: linear in the solution coordinates
  std::vector<std::size_t> moff;
  std::size_t msize = 0;
  for (auto a : m.degrees()) {
    moff.push_back(msize);
    msize += dm.dim(a);
  }
  DenseMatrix a(msize, sols.size());
  std::vector<Coeff> rhs(msize, 0);
  for (std::size_t i = 0; i < m.num_generators(); ++i) {
    std::int32_t ai = m.degrees()[i];
    std::vector<Coeff> amb(dm.piece(ai).ambient.size(), 0);
    amb[dm.piece(ai).index[i].at(0)] = 1;
    auto q = dm.coords(ai, amb);
    std::copy(q.begin(), q.end(), rhs.begin() + static_cast<std::ptrdiff_t>(moff[i]));
  }
  for (std::size_t b = 0; b < sols.size(); ++b) {
    for (std::size_t i = 0; i < m.num_generators(); ++i) {
      std::int32_t ai = m.degrees()[i];
      const auto& px = dx.piece(ai);
      std::vector<Coeff> amb(dm.piece(ai).ambient.size(), 0);
      for (std::size_t k = 0; k < px.basis.size(); ++k) {
        Coeff c = sols[b][s.offsets[i] + k];
        if (c == 0) continue;
        const auto& [mon, comp] = px.ambient[px.basis[k]];
        // pi(mon * e_comp) = mon * column comp of pi
        Column col = column_of(seq.pi.matrix, comp);
        dm.accumulate(dm.piece(ai), mon, col, c, amb);
      }
      auto q = dm.coords(ai, amb);
      for (std::size_t r = 0; r < q.size(); ++r) a(moff[i] + r, b) = q[r];
    }
  }
  std::optional<std::vector<Coeff>> sol;
  if (sols.empty()) {
    bool zero = true;
    for (auto c : rhs) zero = zero && c == 0;
    if (zero) sol = std::vector<Coeff>{};
  } else {
    sol = solve(a, rhs, f);
  }
  if (!sol) return out;
  std::vector<Coeff> v(s.unknowns, 0);
  for (std::size_t b = 0; b < sols.size(); ++b)
    for (std::size_t u = 0; u < s.unknowns; ++u) v[u] = f.add(v[u], f.mul((*sol)[b], sols[b][u]));
  out.found = true;
  out.section = values_to_matrix(dx, m.degrees(), s, v);
  return out;
}

IdempotentVerdict oracle_random_idempotent(const GradedModule& m, int trials, std::uint64_t seed) {
  require(trials >= 1, ErrorKind::Precondition, "oracle_random_idempotent: trials must be at least 1");
  const auto& f = m.r().field();
  DenseModule dm = DenseModule::of(m);
  MapSystem s = map_system(dm, m, dm, 0);
  auto sols = solutions(s, f);
  IdempotentVerdict out;
  out.trials = trials;
  if (sols.size() <= 1) return out;
  std::mt19937_64 rng(seed);
  // identity in value coordinates
  std::vector<Coeff> id(s.unknowns, 0);
  for (std::size_t i = 0; i < m.num_generators(); ++i) {
    std::int32_t ai = m.degrees()[i];
    std::vector<Coeff> amb(dm.piece(ai).ambient.size(), 0);
    amb[dm.piece(ai).index[i].at(0)] = 1;
    auto q = dm.coords(ai, amb);
    std::copy(q.begin(), q.end(), id.begin() + static_cast<std::ptrdiff_t>(s.offsets[i]));
  }
  auto lin = [&](const std::vector<Coeff>& a, Coeff ca, const std::vector<Coeff>& b, Coeff cb) {
    std::vector<Coeff> r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = f.add(f.mul(ca, a[k]), f.mul(cb, b[k]));
    return r;
  };
  auto evaluate = [&](const UPoly& q, const std::vector<Coeff>& phi) {
    std::vector<Coeff> r(s.unknowns, 0);
    for (std::size_t i = q.size(); i-- > 0;) r = lin(compose_values(dm, s, phi, r), 1, id, q[i]);
    return r;
  };
  std::vector<Coeff> zero(s.unknowns, 0);
  for (int t = 0; t < trials; ++t) {
    std::vector<Coeff> phi(s.unknowns, 0);
    for (const auto& b : sols) phi = lin(phi, 1, b, static_cast<Coeff>(rng() % f.characteristic()));
    // minimal polynomial by Krylov iteration
    std::vector<std::vector<Coeff>> powers{id};
    UPoly mu;
    for (;;) {
      auto next = compose_values(dm, s, phi, powers.back());
      DenseMatrix a(s.unknowns, powers.size());
      for (std::size_t c = 0; c < powers.size(); ++c)
        for (std::size_t r = 0; r < s.unknowns; ++r) a(r, c) = powers[c][r];
      auto sol = solve(a, next, f);
      if (sol) {
        mu.assign(powers.size() + 1, 0);
        for (std::size_t i = 0; i < powers.size(); ++i) mu[i] = f.neg((*sol)[i]);
        mu.back() = 1;
        break;
      }
      powers.push_back(std::move(next));
    }
    if (degree(mu) < 2) continue;
    // a root of mu in F_p, its multiplicity, and the cofactor
    UPoly linear_part = upoly_gcd(mu, upoly_sub(upoly_powmod({0, 1}, f.characteristic(), mu, f), {0, 1}, f), f);
    if (degree(linear_part) < 1) continue;
    auto roots = split_roots(linear_part, f, rng);
    UPoly root_factor{f.neg(roots[0]), 1};
    UPoly power{1}, cofactor = mu;
    for (;;) {
      UPoly rem = upoly_mod(cofactor, root_factor, f);
      if (!rem.empty()) break;
      // exact division by (t - lambda)
      UPoly q(cofactor.size() - 1, 0);
      Coeff carry = 0;
      for (std::size_t i = cofactor.size(); i-- > 1;) {
        carry = f.add(cofactor[i], f.mul(carry, roots[0]));
        q[i - 1] = carry;
      }
      cofactor = q;
      power = upoly_mul(power, root_factor, f);
    }
    if (degree(cofactor) < 1) continue;
    // e = s * cofactor with s * cofactor = 1 mod power (extended Euclid)
    UPoly r0 = power, r1 = upoly_mod(cofactor, power, f), s0{}, s1{1};
    while (!r1.empty()) {
      // quotient of r0 by r1
      UPoly q, rem = r0;
      Coeff inv = f.inv(r1.back());
      while (rem.size() >= r1.size() && !rem.empty()) {
        Coeff c = f.mul(rem.back(), inv);
        std::size_t off = rem.size() - r1.size();
        if (q.size() < off + 1) q.resize(off + 1, 0);
        q[off] = c;
        for (std::size_t i = 0; i < r1.size(); ++i) rem[off + i] = f.sub(rem[off + i], f.mul(c, r1[i]));
        trim(rem);
      }
      UPoly s2 = upoly_sub(s0, upoly_mul(q, s1, f), f);
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    Coeff norm = f.inv(r0[0]);
    for (auto& x : s0) x = f.mul(x, norm);
    UPoly e_poly = upoly_mod(upoly_mul(s0, cofactor, f), mu, f);
    auto e = evaluate(e_poly, phi);
    if (compose_values(dm, s, e, e) != e || e == zero || e == id) continue;
    out.found = true;
    out.trial_found = t;
    out.idempotent = values_to_matrix(dm, m.degrees(), s, e);
    return out;
  }
  return out;
}

}  // namespace bigindec
