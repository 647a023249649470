#include "doctest.h"

#include <random>

#include "bigindec/homext.hpp"
#include "fixtures.hpp"

using namespace bigindec;
using namespace fx;

namespace {

long ext_dim(const GradedModule& m, const GradedModule& n, int i) {
  auto e = ext_module(m, n, i);
  auto l = length_and_hilbert(e.module);
  REQUIRE(l.finite);
  return l.length;
}

ModuleMap random_degree0_endo(const HomDegree0& h, std::mt19937_64& rng, const PrimeField& f) {
  std::vector<Coeff> c(h.dim());
  for (auto& v : c) v = static_cast<Coeff>(rng() % f.characteristic());
  return h.combination(c);
}

}  // namespace

TEST_CASE("Hom from free and cyclic modules") {
  auto r = plane();
  auto t = truncation_module(r, 3);
  auto h = hom_module(free_module(r, {0}), t);
  CHECK(length_and_hilbert(h.module).length == 6);
  for (int n = 1; n <= 5; ++n) CHECK(length_and_hilbert(hom_module(residue_field(r), truncation_module(r, n)).module).length == n);
  CHECK(hom_module(residue_field(r), max_ideal(r)).module.is_zero());
}

TEST_CASE("Hom decode and encode round trip") {
  auto a = cone();
  auto m = cone_module(a);
  auto h = hom_module(m, m);
  for (std::size_t j = 0; j < h.size(); ++j) {
    auto f = h.decode(j);
    CHECK(f.is_well_defined());
    auto v = h.encode(f);
    auto g = h.decode(v, f.shift);
    CHECK(maps_equal(f, g));
  }
}

TEST_CASE("endomorphism algebras") {
  auto r = plane();
  CHECK(end_algebra(free_module(r, {0})).h() == 1);
  CHECK(end_algebra(residue_field(r)).h() == 1);
  auto a = cone();
  auto e = end_algebra(cone_module(a));
  CHECK(end_algebra_associative(e));
  CHECK(HomDegree0(cone_module(a), cone_module(a)).dim() == 1);
  auto mm = direct_sum({cone_module(a), cone_module(a)}).module;
  CHECK(HomDegree0(mm, mm).dim() == 4);
}

TEST_CASE("Ext of the maximal ideal into truncations") {
  auto r = plane();
  auto m = max_ideal(r);
  for (int n = 1; n <= 8; ++n) {
    auto t = truncation_module(r, n);
    CHECK(ext_dim(m, t, 1) == 1);
    CHECK(ExtSpace(m, t).dim() == 1);
    CHECK(ext_dim(residue_field(r), t, 2) == 1);
  }
  CHECK(ext_dim(free_module(r, {0}), truncation_module(r, 3), 1) == 0);
}

TEST_CASE("Ext dimensions match Betti numbers") {
  auto a = cone();
  auto k = residue_field(a);
  auto m = cone_module(a);
  CHECK(ext_dim(m, k, 1) == 2);
  CHECK(ExtSpace(m, k).dim() == 2);
  for (const auto& x : {m, truncation_module(a, 2), syzygy(k, 1)}) {
    auto b = free_resolution(x, 4).betti();
    for (int i = 0; i <= 3; ++i) CHECK(ext_dim(x, k, i) == static_cast<long>(b[static_cast<std::size_t>(i)]));
  }
}

TEST_CASE("Ext classes: equality and linear structure") {
  auto a = cone();
  auto m = cone_module(a);
  auto space = ExtSpace(m, residue_field(a));
  REQUIRE(space.dim() == 2);
  const auto& g = space.basis();
  CHECK(ext_class_equal(g[0], g[0]));
  CHECK_FALSE(ext_class_equal(g[0], g[1]));
  CHECK_FALSE(space.is_zero(g[0]));
  auto sum = add(g[0], scale(g[1], 5));
  auto c = space.coordinates(sum);
  CHECK(c == std::vector<Coeff>{1, 5});
  CHECK(ext_class_equal(add(g[0], scale(g[0], a->field().neg(1))), ExtClass::zero(m, residue_field(a), g[0].degree)));
}

TEST_CASE("right End(M) action axioms") {
  auto a = cone();
  auto m = cone_module(a);
  const auto& f = a->field();
  auto h0 = HomDegree0(m, m);
  auto xm = ModuleMap::make(m, m, parse_relations(*a, {0, 0}, {"x*e1", "x*e2"}).shifted(0), 1);
  for (int n : {2, 3}) {
    auto t = truncation_module(a, n);
    ExtSpace space(m, t);
    std::mt19937_64 rng(7 + n);
    for (const auto& alpha : space.basis()) {
      CHECK(ext_class_equal(ext_action(alpha, ModuleMap::identity(m)), alpha));
      CHECK(space.is_zero(ext_action(alpha, ModuleMap::zero(m, m))));
      auto b1 = random_degree0_endo(h0, rng, f);
      auto b2 = random_degree0_endo(h0, rng, f);
      CHECK(ext_class_equal(ext_action(alpha, add(b1, b2)), add(ext_action(alpha, b1), ext_action(alpha, b2))));
      CHECK(ext_class_equal(ext_action(ext_action(alpha, xm), xm), ext_action(alpha, compose(xm, xm))));
    }
  }
}

TEST_CASE("annihilator exponent") {
  auto r = plane();
  CHECK(annihilator_exponent(free_module(r, {0})) == 0);
  CHECK(annihilator_exponent(max_ideal(r)) == 1);
  auto a = cone();
  auto m = cone_module(a);
  int s = annihilator_exponent(m);
  CHECK(s >= 1);
  for (int n = 1; n <= 8; ++n) CHECK(killed_by_power(ext_module(m, truncation_module(a, n), 1).module, s));
  auto x2 = parse_module(r, {0}, {"x^2*e1"});
  CHECK_THROWS_AS(annihilator_exponent(x2), Error);
}

TEST_CASE("connecting isomorphism Ext1(m, T) = Ext2(k, T)") {
  auto r = plane();
  for (int n = 1; n <= 8; ++n) {
    auto t = truncation_module(r, n);
    CHECK(ext_dim(max_ideal(r), t, 1) == ext_dim(residue_field(r), t, 2));
  }
}
