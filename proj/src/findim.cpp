#include "bigindec/findim.hpp"

#include <map>
#include <random>

namespace bigindec {

namespace {

Vec axpy(Vec y, Coeff a, const Vec& x, const PrimeField& f) {
  if (a == 0) return y;
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = f.add(y[i], f.mul(a, x[i]));
  return y;
}

bool is_zero_vec(const Vec& v) {
  for (auto c : v)
    if (c != 0) return false;
  return true;
}

Vec power(const FinDimAlgebra& a, Vec x, std::uint64_t e) {
  Vec r = a.unit();
  while (e > 0) {
    if (e & 1) r = a.multiply(r, x);
    x = a.multiply(x, x);
    e >>= 1;
  }
  return r;
}

std::vector<Vec> reduced_rows(const std::vector<Vec>& vs, std::size_t dim, const PrimeField& f) {
  SubspaceBasis b(dim, f);
  for (const auto& v : vs) b.insert(v);
  return b.rows();
}

// Evaluates the polynomial q at x.
Vec evaluate(const FinDimAlgebra& a, const UPoly& q, const Vec& x) {
  const auto& f = a.field();
  Vec r(a.dim(), 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    r = a.multiply(r, x);
    r = axpy(r, q[i], a.unit(), f);
  }
  return r;
}

// Lagrange idempotent of an element whose minimal polynomial has distinct
// roots in F_p; nullopt when the element is a scalar.
std::optional<Vec> split_element(const FinDimAlgebra& a, const Vec& y, std::mt19937_64& rng) {
  const auto& f = a.field();
  UPoly mu = minimal_polynomial(a, y);
  if (degree(mu) <= 1) return std::nullopt;
  auto roots = split_roots(mu, f, rng);
  require(static_cast<int>(roots.size()) == degree(mu), ErrorKind::Internal, "split_element: minimal polynomial does not split");
  UPoly l{1};
  for (std::size_t j = 1; j < roots.size(); ++j) {
    Coeff inv = f.inv(f.sub(roots[0], roots[j]));
    l = upoly_mul(l, {f.mul(f.neg(roots[j]), inv), inv}, f);
  }
  return evaluate(a, l, y);
}

// Elements of the Frobenius-fixed part of the commutative subalgebra F_p[x]
// that are not scalars, as polynomials in x.
std::optional<UPoly> frobenius_fixed_in_span(const FinDimAlgebra& a, const Vec& x) {
  const auto& f = a.field();
  UPoly mu = minimal_polynomial(a, x);
  int d = degree(mu);
  if (d <= 1) return std::nullopt;
  // matrix of t^i -> t^(i p) - t^i on F_p[t]/mu
  UPoly tp = upoly_powmod({0, 1}, f.characteristic(), mu, f);
  DenseMatrix fm(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  UPoly cur{1};
  for (int i = 0; i < d; ++i) {
    UPoly basis_i(static_cast<std::size_t>(i) + 1, 0);
    basis_i[static_cast<std::size_t>(i)] = 1;
    UPoly img = upoly_sub(cur, basis_i, f);
    for (std::size_t k = 0; k < img.size(); ++k) fm(k, static_cast<std::size_t>(i)) = img[k];
    cur = upoly_mod(upoly_mul(cur, tp, f), mu, f);
  }
  auto ker = kernel(fm, f);
  for (const auto& v : ker) {
    UPoly q(v.begin(), v.end());
    trim(q);
    if (degree(q) >= 1) return q;
  }
  return std::nullopt;
}

}  // namespace

FinDimAlgebra::FinDimAlgebra(PrimeField f, std::vector<std::vector<Vec>> table, Vec unit, bool validate)
    : field_(f), dim_(unit.size()), unit_(std::move(unit)) {
  require(table.size() == dim_, ErrorKind::Internal, "FinDimAlgebra: table size");
  table_.assign(dim_ * dim_ * dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    require(table[i].size() == dim_, ErrorKind::Internal, "FinDimAlgebra: table size");
    for (std::size_t j = 0; j < dim_; ++j) {
      require(table[i][j].size() == dim_, ErrorKind::Internal, "FinDimAlgebra: table size");
      std::copy(table[i][j].begin(), table[i][j].end(), table_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_));
    }
  }
  if (!validate) return;
  for (std::size_t i = 0; i < dim_; ++i) {
    Vec b = basis_vector(i);
    require(multiply(unit_, b) == b && multiply(b, unit_) == b, ErrorKind::Internal,
            "FinDimAlgebra: unit law fails");
  }
  require(is_associative(), ErrorKind::Internal, "FinDimAlgebra: not associative");
}

Vec FinDimAlgebra::basis_vector(std::size_t i) const {
  Vec v(dim_, 0);
  v[i] = 1;
  return v;
}

Vec FinDimAlgebra::multiply(const Vec& x, const Vec& y) const {
  Vec out(dim_, 0);
  std::vector<std::uint64_t> acc(dim_, 0);
  const std::uint64_t p = field_.characteristic();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      std::uint64_t c = static_cast<std::uint64_t>(x[i]) * y[j] % p;
      const Coeff* row = &table_[(i * dim_ + j) * dim_];
      for (std::size_t k = 0; k < dim_; ++k)
        if (row[k] != 0) acc[k] = (acc[k] + c * row[k]) % p;
    }
  }
  for (std::size_t k = 0; k < dim_; ++k) out[k] = static_cast<Coeff>(acc[k]);
  return out;
}

bool FinDimAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (constant(i, j, k) != constant(j, i, k)) return false;
  return true;
}

bool FinDimAlgebra::is_associative(std::size_t sample_limit) const {
  auto check = [&](std::size_t i, std::size_t j, std::size_t k) {
    Vec bi = basis_vector(i), bj = basis_vector(j), bk = basis_vector(k);
    return multiply(multiply(bi, bj), bk) == multiply(bi, multiply(bj, bk));
  };
  if (dim_ <= 24) {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
          if (!check(i, j, k)) return false;
    return true;
  }
  std::mt19937_64 rng(0x5eed);
  for (std::size_t t = 0; t < sample_limit; ++t)
    if (!check(rng() % dim_, rng() % dim_, rng() % dim_)) return false;
  return true;
}

DenseMatrix FinDimAlgebra::left_multiplication(const Vec& x) const {
  DenseMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec c = multiply(x, basis_vector(j));
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = c[k];
  }
  return m;
}

std::size_t matrix_index(std::size_t i, std::size_t j, std::size_t k, std::size_t r, std::size_t dim) {
  return (i * r + j) * dim + k;
}

FinDimAlgebra matrix_algebra(const FinDimAlgebra& a, std::size_t r) {
  std::size_t d = a.dim(), n = r * r * d;
  std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n, Vec(n, 0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t m = 0; m < r; ++m)
          for (std::size_t l = 0; l < d; ++l) {
            auto& out = table[matrix_index(i, j, k, r, d)][matrix_index(j, m, l, r, d)];
            for (std::size_t q = 0; q < d; ++q) out[matrix_index(i, m, q, r, d)] = a.constant(k, l, q);
          }
  Vec unit(n, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < d; ++k) unit[matrix_index(i, i, k, r, d)] = a.unit()[k];
  return FinDimAlgebra(a.field(), std::move(table), std::move(unit), n <= 24);
}

Vec QuotientAlgebra::project(const Vec& x) const {
  Vec y = x;
  ideal.reduce(y);
  Vec q(complement.size());
  for (std::size_t i = 0; i < complement.size(); ++i) q[i] = y[complement[i]];
  return q;
}

Vec QuotientAlgebra::lift(const Vec& q) const {
  Vec x(ideal.ambient_dim(), 0);
  for (std::size_t i = 0; i < complement.size(); ++i) x[complement[i]] = q[i];
  return x;
}

QuotientAlgebra quotient_algebra(const FinDimAlgebra& a, const std::vector<Vec>& ideal) {
  QuotientAlgebra q{FinDimAlgebra(), SubspaceBasis(a.dim(), a.field()), {}};
  for (const auto& v : ideal) q.ideal.insert(v);
  std::vector<char> pivot(a.dim(), 0);
  for (auto p : q.ideal.pivots()) pivot[p] = 1;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!pivot[i]) q.complement.push_back(i);
  std::size_t n = q.complement.size();
  std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i][j] = q.project(a.multiply(a.basis_vector(q.complement[i]), a.basis_vector(q.complement[j])));
  q.algebra = FinDimAlgebra(a.field(), std::move(table), q.project(a.unit()), n <= 24);
  return q;
}

Vec FinDimModule::act(const Vec& v, const Vec& element, const PrimeField& f) const {
  Vec out(dim, 0);
  for (std::size_t k = 0; k < action.size(); ++k) {
    if (element[k] == 0) continue;
    out = axpy(out, element[k], apply(action[k], v, f), f);
  }
  return out;
}

bool FinDimModule::is_module_over(const FinDimAlgebra& a) const {
  if (action.size() != a.dim()) return false;
  const auto& f = a.field();
  for (std::size_t i = 0; i < dim; ++i) {
    Vec v(dim, 0);
    v[i] = 1;
    if (act(v, a.unit(), f) != v) return false;
    for (std::size_t x = 0; x < a.dim(); ++x)
      for (std::size_t y = 0; y < a.dim(); ++y) {
        Vec lhs = act(act(v, a.basis_vector(x), f), a.basis_vector(y), f);
        Vec rhs = act(v, a.multiply(a.basis_vector(x), a.basis_vector(y)), f);
        if (lhs != rhs) return false;
      }
  }
  return true;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v, const PrimeField& f) {
  SubspaceBasis b(v.size(), f);
  for (const auto& x : basis) b.insert(x);
  return b.contains(v);
}

std::vector<Vec> radical(const FinDimAlgebra& a) {
  const auto& f = a.field();
  std::size_t d = a.dim();
  require(d < f.characteristic(), ErrorKind::CharacteristicGuard,
          "radical: algebra dimension " + std::to_string(d) + " is not below the characteristic " +
              std::to_string(f.characteristic()) + "; raise BIGINDEC_PRIME");
  Vec tau(d, 0);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t m = 0; m < d; ++m) tau[k] = f.add(tau[k], a.constant(k, m, m));
  DenseMatrix gram(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Coeff s = 0;
      for (std::size_t k = 0; k < d; ++k) s = f.add(s, f.mul(a.constant(i, j, k), tau[k]));
      gram(i, j) = s;
    }
  std::vector<Vec> j = reduced_rows(kernel(gram, f), d, f);
  // two-sided ideal and nilpotent
  SubspaceBasis span(d, f);
  for (const auto& v : j) span.insert(v);
  for (const auto& v : j)
    for (std::size_t i = 0; i < d; ++i) {
      require(span.contains(a.multiply(v, a.basis_vector(i))) && span.contains(a.multiply(a.basis_vector(i), v)),
              ErrorKind::Internal, "radical: trace radical is not an ideal");
    }
  std::vector<Vec> pw = j;
  for (std::size_t step = 0; step <= d && !pw.empty(); ++step) {
    std::vector<Vec> next;
    for (const auto& x : pw)
      for (const auto& y : j) next.push_back(a.multiply(x, y));
    pw = reduced_rows(next, d, f);
  }
  require(pw.empty(), ErrorKind::Internal, "radical: trace radical is not nilpotent");
  return j;
}

UPoly minimal_polynomial(const FinDimAlgebra& a, const Vec& x) {
  const auto& f = a.field();
  std::vector<Vec> powers{a.unit()};
  for (;;) {
    Vec next = a.multiply(powers.back(), x);
    DenseMatrix m(a.dim(), powers.size());
    for (std::size_t c = 0; c < powers.size(); ++c)
      for (std::size_t r = 0; r < a.dim(); ++r) m(r, c) = powers[c][r];
    auto sol = solve(m, next, f);
    if (sol) {
      UPoly mu(powers.size() + 1, 0);
      for (std::size_t i = 0; i < powers.size(); ++i) mu[i] = f.neg((*sol)[i]);
      mu.back() = 1;
      return mu;
    }
    powers.push_back(std::move(next));
  }
}

LocalityVerdict locality_and_idempotents(const FinDimAlgebra& a, std::uint64_t seed) {
  require(a.dim() > 0, ErrorKind::Precondition, "locality: zero algebra");
  const auto& f = a.field();
  LocalityVerdict out;
  auto j = radical(a);
  out.radical_dim = j.size();
  QuotientAlgebra q = quotient_algebra(a, j);
  const FinDimAlgebra& s = q.algebra;
  out.residue_dim = s.dim();
  std::mt19937_64 rng(seed);

  std::optional<Vec> e;
  if (s.is_commutative()) {
    // Berlekamp: the Frobenius-fixed subspace has one dimension per field factor
    DenseMatrix fm(s.dim(), s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
      Vec img = power(s, s.basis_vector(i), f.characteristic());
      img[i] = f.sub(img[i], 1);
      for (std::size_t k = 0; k < s.dim(); ++k) fm(k, i) = img[k];
    }
    auto fixed = kernel(fm, f);
    if (fixed.size() == 1) {
      out.local = true;
      return out;
    }
    for (const auto& y : fixed)
      if ((e = split_element(s, y, rng))) break;
  } else {
    for (std::size_t t = 0; t < 64 * s.dim() + 256 && !e; ++t) {
      Vec x(s.dim(), 0);
      if (t < s.dim()) {
        x[t] = 1;
      } else {
        for (auto& c : x) c = static_cast<Coeff>(rng() % f.characteristic());
      }
      if (auto qpoly = frobenius_fixed_in_span(s, x)) e = split_element(s, evaluate(s, *qpoly, x), rng);
    }
  }
  require(e.has_value(), ErrorKind::Internal, "locality: no idempotent found in a non-local residue algebra");

  Vec lifted = q.lift(*e);
  for (int it = 0; it < 128; ++it) {
    Vec sq = a.multiply(lifted, lifted);
    if (sq == lifted) break;
    Vec cu = a.multiply(sq, lifted);
    Vec next(a.dim(), 0);
    next = axpy(next, 3, sq, f);
    next = axpy(next, f.neg(2), cu, f);
    lifted = std::move(next);
  }
  require(a.multiply(lifted, lifted) == lifted && !is_zero_vec(lifted) && lifted != a.unit(), ErrorKind::Internal,
          "locality: idempotent lifting failed");
  out.idempotent = std::move(lifted);
  return out;
}

GeneratorSelection minimal_generators_over(const FinDimAlgebra& a, const FinDimModule& v,
                                           const std::vector<Vec>& candidates) {
  const auto& f = a.field();
  auto verdict = locality_and_idempotents(a);
  require(verdict.local, ErrorKind::Precondition, "minimal_generators_over: algebra not local");
  auto j = radical(a);
  SubspaceBasis w(v.dim, f);
  for (std::size_t i = 0; i < v.dim; ++i) {
    Vec e(v.dim, 0);
    e[i] = 1;
    for (const auto& x : j) w.insert(v.act(e, x, f));
  }
  GeneratorSelection out;
  out.top_dim = v.dim - w.size();
  std::vector<Vec> cands = candidates;
  if (cands.empty())
    for (std::size_t i = 0; i < v.dim; ++i) {
      Vec e(v.dim, 0);
      e[i] = 1;
      cands.push_back(std::move(e));
    }
  for (std::size_t c = 0; c < cands.size() && w.size() < v.dim; ++c) {
    if (w.contains(cands[c])) continue;
    for (std::size_t k = 0; k < a.dim(); ++k) w.insert(apply(v.action[k], cands[c], f));
    out.chosen.push_back(c);
  }
  require(w.size() == v.dim, ErrorKind::Precondition, "minimal_generators_over: candidates do not generate");
  out.nu = out.chosen.size();
  require(out.top_dim == out.nu * verdict.residue_dim, ErrorKind::Internal,
          "minimal_generators_over: top is not a free module over the residue field");
  return out;
}

bool jacobson_containment(const FinDimAlgebra& a, const std::vector<Vec>& elements) {
  auto j = radical(a);
  SubspaceBasis span(a.dim(), a.field());
  for (const auto& v : j) span.insert(v);
  for (const auto& x : elements)
    if (!span.contains(x)) return false;
  return true;
}

RowAnnihilator row_annihilator(const FinDimAlgebra& a, const FinDimModule& v, const std::vector<Vec>& gens) {
  const auto& f = a.field();
  std::size_t r = gens.size(), d = a.dim();
  FinDimAlgebra c = matrix_algebra(a, r);
  // column (i, j, k): g_i . a_k placed in slot j of V^r
  DenseMatrix rho(r * v.dim, c.dim());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      Vec img = apply(v.action[k], gens[i], f);
      for (std::size_t jj = 0; jj < r; ++jj)
        for (std::size_t q = 0; q < v.dim; ++q) rho(jj * v.dim + q, matrix_index(i, jj, k, r, d)) = img[q];
    }
  auto ker = kernel(rho, f);
  RowAnnihilator out;
  out.kernel_dim = ker.size();
  auto rad = radical(c);
  out.radical_dim = rad.size();
  SubspaceBasis span(c.dim(), f);
  for (const auto& x : rad) span.insert(x);
  out.contained = true;
  for (const auto& x : ker)
    if (!span.contains(x)) out.contained = false;
  return out;
}

ReducedEnd reduce_mod_m(const EndAlgebra& b, int exponent) {
  require(exponent >= 1, ErrorKind::Precondition, "reduce_mod_m: exponent must be positive");
  const GradedModule& e = b.hom.module;
  const RingPtr& ring = e.ring();
  const auto& f = ring->field();
  auto mons = ring->monomials_of_standard_degree(exponent);
  std::vector<std::int32_t> extra_deg;
  for (std::size_t a = 0; a < e.num_generators(); ++a)
    for (const auto& mu : mons) extra_deg.push_back(e.degrees()[a] + mu.degree);
  PolyMatrix extra(e.degrees(), extra_deg);
  std::size_t col = 0;
  for (std::size_t a = 0; a < e.num_generators(); ++a)
    for (const auto& mu : mons) extra.at(a, col++) = ring->reduce(Polynomial::monomial(mu));
  ReducedEnd out;
  out.exponent = exponent;
  out.module = GradedModule(ring, e.degrees(), concat_columns(e.relations(), extra));
  LengthData ld = length_and_hilbert(out.module);
  require(ld.finite, ErrorKind::Internal, "reduce_mod_m: quotient is not of finite length");
  for (const auto& [deg, len] : ld.hilbert) {
    auto piece = graded_piece_basis(out.module, deg);
    out.basis.insert(out.basis.end(), piece.begin(), piece.end());
  }
  std::map<std::pair<std::uint64_t, std::uint32_t>, std::size_t> index;
  for (std::size_t i = 0; i < out.basis.size(); ++i) index[{out.basis[i].first.exps, out.basis[i].second}] = i;
  std::size_t n = out.basis.size();
  auto coords = [&](const ModVec& v) {
    Vec c(n, 0);
    ModVec nf = out.module.normal_form(v);
    for (const auto& t : nf.terms()) {
      auto it = index.find({t.mon.exps, t.comp});
      require(it != index.end(), ErrorKind::Internal, "reduce_mod_m: normal form outside the basis");
      c[it->second] = t.coeff;
    }
    return c;
  };
  auto element = [&](std::size_t i) {
    const auto& [mu, a] = out.basis[i];
    return embed(Polynomial::monomial(mu), a, e.degrees()[a]);
  };
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [mu, a] = out.basis[i];
    out.maps.push_back(b.hom.decode(element(i), e.degrees()[a] + mu.degree));
  }
  std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& [mu, a] = out.basis[i];
      const auto& [nu, c] = out.basis[j];
      table[i][j] = coords(mul_term(b.table[a][c], mu * nu, 1, f));
    }
  out.algebra = FinDimAlgebra(f, std::move(table), coords(b.unit), n <= 24);
  return out;
}

FinDimModule ext_as_module(const ExtSpace& space, const ReducedEnd& e) {
  FinDimModule v;
  v.dim = space.dim();
  for (const auto& map : e.maps) {
    DenseMatrix act(v.dim, v.dim);
    for (std::size_t i = 0; i < v.dim; ++i) {
      auto c = space.coordinates(ext_action(space.basis()[i], map));
      for (std::size_t k = 0; k < v.dim; ++k) act(k, i) = c[k];
    }
    v.action.push_back(std::move(act));
  }
  return v;
}

End0 degree_zero_endomorphisms(const GradedModule& m) {
  HomDegree0 hom(m, m);
  const auto& f = m.r().field();
  std::size_t n = hom.dim();
  require(n > 0, ErrorKind::Precondition, "degree_zero_endomorphisms: zero module");
  std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = hom.coordinates(compose(hom.basis()[i], hom.basis()[j]));
  Vec unit = hom.coordinates(ModuleMap::identity(m));
  FinDimAlgebra alg(f, std::move(table), std::move(unit), n <= 24);
  return End0{std::move(hom), std::move(alg)};
}

}  // namespace bigindec
