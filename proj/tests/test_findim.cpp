#include "doctest.h"

#include <random>

#include "bigindec/findim.hpp"
#include "fixtures.hpp"

using namespace bigindec;
using namespace fx;

namespace {

// Algebra spanned by the given n x n matrices (closed under products),
// basis in the given order, matrix product as multiplication.
FinDimAlgebra from_matrices(const std::vector<DenseMatrix>& mats, const PrimeField& f) {
  std::size_t d = mats.size(), n = mats[0].rows();
  DenseMatrix span(n * n, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t e = 0; e < n * n; ++e) span(e, k) = mats[k](e / n, e % n);
  auto coords = [&](const DenseMatrix& m) {
    std::vector<Coeff> rhs(n * n);
    for (std::size_t e = 0; e < n * n; ++e) rhs[e] = m(e / n, e % n);
    auto x = solve(span, rhs, f);
    REQUIRE(x.has_value());
    return *x;
  };
  std::vector<std::vector<Vec>> table(d, std::vector<Vec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) table[i][j] = coords(multiply(mats[i], mats[j], f));
  return FinDimAlgebra(f, table, coords(DenseMatrix::identity(n)));
}

DenseMatrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  DenseMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

FinDimAlgebra dual_numbers(const PrimeField& f) {
  return from_matrices({DenseMatrix::identity(2), unit_matrix(2, 0, 1)}, f);
}

FinDimAlgebra split_pair(const PrimeField& f) { return from_matrices({unit_matrix(2, 0, 0), unit_matrix(2, 1, 1)}, f); }

FinDimAlgebra full_matrices(const PrimeField& f) {
  return from_matrices({unit_matrix(2, 0, 0), unit_matrix(2, 0, 1), unit_matrix(2, 1, 0), unit_matrix(2, 1, 1)}, f);
}

// F_p[t]/(t^2 - c) for a non-square c: a field of dimension 2.
FinDimAlgebra quadratic_field(const PrimeField& f, Coeff c) {
  std::vector<std::vector<Vec>> t(2, std::vector<Vec>(2));
  t[0][0] = {1, 0};
  t[0][1] = {0, 1};
  t[1][0] = {0, 1};
  t[1][1] = {c, 0};
  return FinDimAlgebra(f, t, {1, 0});
}

bool is_idempotent(const FinDimAlgebra& a, const Vec& e) {
  Vec zero(a.dim(), 0);
  return a.multiply(e, e) == e && e != zero && e != a.unit();
}

}  // namespace

TEST_CASE("radicals of small algebras") {
  PrimeField f;
  auto d = dual_numbers(f);
  auto jd = radical(d);
  REQUIRE(jd.size() == 1);
  CHECK(jd[0] == Vec{0, 1});
  CHECK(radical(split_pair(f)).empty());
  CHECK(radical(full_matrices(f)).empty());
  auto upper = from_matrices({unit_matrix(2, 0, 0), unit_matrix(2, 0, 1), unit_matrix(2, 1, 1)}, f);
  CHECK(radical(upper) == std::vector<Vec>{{0, 1, 0}});
}

TEST_CASE("characteristic guard") {
  PrimeField f3(3);
  std::vector<DenseMatrix> diag;
  for (std::size_t i = 0; i < 3; ++i) diag.push_back(unit_matrix(3, i, i));
  auto a = from_matrices(diag, f3);
  CHECK_THROWS_AS(radical(a), Error);
  try {
    radical(a);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CharacteristicGuard);
  }
}

TEST_CASE("locality and idempotents") {
  PrimeField f;
  CHECK(locality_and_idempotents(dual_numbers(f)).local);
  auto kk = locality_and_idempotents(split_pair(f));
  CHECK_FALSE(kk.local);
  REQUIRE(kk.idempotent);
  CHECK(is_idempotent(split_pair(f), *kk.idempotent));
  auto m2 = full_matrices(f);
  auto v = locality_and_idempotents(m2);
  CHECK_FALSE(v.local);
  REQUIRE(v.idempotent);
  CHECK(is_idempotent(m2, *v.idempotent));
  // 2 is not a square modulo 32003 since 32003 = 3 mod 8
  auto fq = quadratic_field(f, 2);
  auto lf = locality_and_idempotents(fq);
  CHECK(lf.local);
  CHECK(lf.residue_dim == 2);
  // upper triangular matrices: idempotent lifted through the radical
  auto upper = from_matrices({unit_matrix(2, 0, 0), unit_matrix(2, 0, 1), unit_matrix(2, 1, 1)}, f);
  auto u = locality_and_idempotents(upper);
  REQUIRE(u.idempotent);
  CHECK(is_idempotent(upper, *u.idempotent));
  // matrices over the quadratic field
  auto m2q = matrix_algebra(fq, 2);
  auto w = locality_and_idempotents(m2q);
  REQUIRE(w.idempotent);
  CHECK(is_idempotent(m2q, *w.idempotent));
}

TEST_CASE("matrix algebra radical is M_r(J)") {
  PrimeField f;
  auto c = matrix_algebra(dual_numbers(f), 3);
  CHECK(c.dim() == 18);
  auto j = radical(c);
  CHECK(j.size() == 9);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) {
      Vec e(18, 0);
      e[matrix_index(i, k, 1, 3, 2)] = 1;
      CHECK(in_span(j, e, f));
    }
}

TEST_CASE("reduction of endomorphism rings modulo m") {
  auto r = plane();
  auto er = reduce_mod_m(end_algebra(free_module(r, {0})), 1);
  CHECK(er.algebra.dim() == 1);
  auto k = residue_field(r);
  auto kk = reduce_mod_m(end_algebra(direct_sum({k, k}).module), 1);
  CHECK(kk.algebra.dim() == 4);
  CHECK(radical(kk.algebra).empty());
  CHECK_FALSE(locality_and_idempotents(kk.algebra).local);
  auto a = cone();
  auto em = reduce_mod_m(end_algebra(cone_module(a)), 1);
  auto lv = locality_and_idempotents(em.algebra);
  CHECK(lv.local);
  CHECK(lv.residue_dim == 1);
  auto e2 = reduce_mod_m(end_algebra(cone_module(a)), 2);
  CHECK(e2.algebra.dim() > em.algebra.dim());
  CHECK(locality_and_idempotents(e2.algebra).local);
}

TEST_CASE("minimal generators over local algebras") {
  PrimeField f;
  auto d = dual_numbers(f);
  FinDimModule regular{2, {DenseMatrix(2, 2), DenseMatrix(2, 2)}};
  // right regular module: v . b = v b
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t i = 0; i < 2; ++i) {
      Vec img = d.multiply(d.basis_vector(i), d.basis_vector(k));
      for (std::size_t q = 0; q < 2; ++q) regular.action[k](q, i) = img[q];
    }
  REQUIRE(regular.is_module_over(d));
  auto g = minimal_generators_over(d, regular);
  CHECK(g.nu == 1);
  CHECK(g.chosen == std::vector<std::size_t>{0});

  FinDimModule simple3{3, {DenseMatrix::identity(3), DenseMatrix(3, 3)}};
  REQUIRE(simple3.is_module_over(d));
  CHECK(minimal_generators_over(d, simple3).nu == 3);
  CHECK_THROWS_AS(minimal_generators_over(split_pair(f), FinDimModule{1, {DenseMatrix::identity(1), DenseMatrix(1, 1)}}),
                  Error);
}

TEST_CASE("Ext as a module over the reduced endomorphism ring") {
  auto a = cone();
  auto m = cone_module(a);
  int s = annihilator_exponent(m);
  auto e = reduce_mod_m(end_algebra(m), s);
  for (int n = 1; n <= 4; ++n) {
    ExtSpace space(m, truncation_module(a, n));
    auto v = ext_as_module(space, e);
    CHECK(v.is_module_over(e.algebra));
    auto g = minimal_generators_over(e.algebra, v);
    CHECK(g.nu >= 1);
    CHECK(g.nu <= space.dim());
    std::vector<std::size_t> rev;
    std::vector<Vec> cands;
    for (std::size_t i = space.dim(); i-- > 0;) {
      Vec x(space.dim(), 0);
      x[i] = 1;
      cands.push_back(x);
    }
    CHECK(minimal_generators_over(e.algebra, v, cands).nu == g.nu);
  }
}

TEST_CASE("row annihilators of minimal generator tuples lie in the radical") {
  // V = A^2 (x) top over the local algebra k[e]/(e^2); random tuples drawn
  // from minimal generating sets of V.
  PrimeField f;
  auto d = dual_numbers(f);
  std::mt19937_64 rng(99);
  FinDimModule v{4, {DenseMatrix::identity(4), DenseMatrix(4, 4)}};
  v.action[1](1, 0) = 1;  // e1 . e = e2
  v.action[1](3, 2) = 1;  // e3 . e = e4
  REQUIRE(v.is_module_over(d));
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Vec> cands;
    for (int c = 0; c < 6; ++c) {
      Vec x(4);
      for (auto& y : x) y = static_cast<Coeff>(rng() % f.characteristic());
      cands.push_back(x);
    }
    auto g = minimal_generators_over(d, v, cands);
    REQUIRE(g.nu == 2);
    for (std::size_t r = 1; r <= 2; ++r) {
      std::vector<Vec> tuple;
      for (std::size_t i = 0; i < r; ++i) tuple.push_back(cands[g.chosen[i]]);
      auto ra = row_annihilator(d, v, tuple);
      CHECK(ra.contained);
    }
  }
  // a tuple that is not part of a minimal generating set fails
  Vec a{1, 0, 0, 0}, b{0, 1, 0, 0};
  CHECK_FALSE(row_annihilator(d, v, {a, b}).contained);
}

TEST_CASE("Jacobson containment") {
  PrimeField f;
  auto d = dual_numbers(f);
  CHECK(jacobson_containment(d, {{0, 0}}));
  CHECK(jacobson_containment(d, {{0, 5}}));
  CHECK_FALSE(jacobson_containment(d, {d.unit()}));
}

TEST_CASE("degree zero endomorphisms") {
  auto a = cone();
  auto m = cone_module(a);
  auto e0 = degree_zero_endomorphisms(m);
  CHECK(e0.algebra.dim() == 1);
  CHECK(locality_and_idempotents(e0.algebra).local);
  auto mm = degree_zero_endomorphisms(direct_sum({m, m}).module);
  CHECK(mm.algebra.dim() == 4);
  auto v = locality_and_idempotents(mm.algebra);
  CHECK_FALSE(v.local);
  REQUIRE(v.idempotent);
  auto p = mm.hom.combination(*v.idempotent);
  CHECK(maps_equal(compose(p, p), p));
}
