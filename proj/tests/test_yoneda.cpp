#include "doctest.h"

#include <random>

#include "bigindec/yoneda.hpp"
#include "fixtures.hpp"
#include "random_helpers.hpp"

using namespace bigindec;
using namespace fx;

namespace {

ShortExactSequence koszul_sequence(const RingPtr& r) {
  auto m = max_ideal(r);
  auto free = free_module(r, {0});
  auto k = residue_field(r);
  PolyMatrix inc(free.degrees(), m.degrees());
  for (std::size_t i = 0; i < m.num_generators(); ++i) inc.at(0, i) = r->var(static_cast<int>(i));
  return make_sequence(ModuleMap::make(m, free, inc, 0), ModuleMap::make(free, k, PolyMatrix::identity({0}), 0));
}

}  // namespace

TEST_CASE("exactness and splitting of basic sequences") {
  auto r = plane();
  auto n = residue_field(r);
  auto m = max_ideal(r);
  auto ds = direct_sum({n, m});
  auto split = make_sequence(ds.iota[0], ds.pi[1]);
  CHECK(split.verified);
  CHECK(is_split(split));
  CHECK(ext_class_equal(class_of(split), ExtClass::zero(m, n)));

  auto kos = koszul_sequence(r);
  CHECK(kos.verified);
  CHECK_FALSE(is_split(kos));
  CHECK_FALSE(ext_class_equal(class_of(kos), ExtClass::zero(residue_field(r), m)));

  // pi not surjective: multiplication by x on R
  auto free = free_module(r, {0});
  auto xmap = ModuleMap::make(free.shifted(1), free, parse_relations(*r, {0}, {"x*e1"}), 0);
  auto bad = verify_exact(ModuleMap::zero(GradedModule::free(r, {}), free.shifted(1)), xmap);
  CHECK_FALSE(bad.exact);
  CHECK(bad.failing == "surjective");
  auto comp = verify_exact(ModuleMap::identity(free), ModuleMap::identity(free));
  CHECK(comp.failing == "composition");
}

TEST_CASE("pushout of cocycles") {
  auto r = plane();
  auto m = max_ideal(r);
  auto k = residue_field(r);
  auto zero = pushout_extension(ExtClass::zero(m, k));
  CHECK(zero.verified);
  CHECK(is_split(zero));

  ExtSpace space(m, k);
  REQUIRE(space.dim() == 1);
  auto g = space.basis()[0].regraded(space.basis()[0].degree);
  REQUIRE(g.degree == 0);
  auto s = pushout_extension(g);
  CHECK(s.verified);
  CHECK_FALSE(is_split(s));
  CHECK(minimal_presentation(s.middle()).nu() <= 3);
  CHECK(ext_class_equal(class_of(s), g));

  auto a = cone();
  auto cm = minimal_presentation(cone_module(a)).module;
  auto beta = syzygy_class(cm);
  auto t = pushout_extension(beta);
  CHECK(t.verified);
  auto x = minimal_presentation(t.middle()).module;
  CHECK(x.num_generators() == cm.num_generators());
  CHECK(x.relations().cols() == 0);
}

TEST_CASE("pullback agrees with the chain-map action") {
  auto a = cone();
  auto m = cone_module(a);
  auto k = residue_field(a);
  ExtSpace space(m, k);
  REQUIRE(space.dim() == 2);
  for (const auto& b : space.basis()) {
    auto alpha = b.regraded(b.degree);
    auto s = pushout_extension(alpha);
    REQUIRE(s.verified);
    auto same = pullback(s, ModuleMap::identity(alpha.source));
    CHECK(same.verified);
    CHECK(ext_class_equal(class_of(same), alpha));
    auto none = pullback(s, ModuleMap::zero(alpha.source, alpha.source));
    CHECK(is_split(none));
    auto x = mult_by(alpha.source, "x");
    auto px = pullback(s, x);
    CHECK(px.verified);
    CHECK(ext_class_equal(class_of(px), ext_action(alpha, x).regraded(1)));
  }
}

TEST_CASE("pullback and action agree on random instances") {
  auto a = cone();
  const auto& f = a->field();
  std::mt19937_64 rng(2024);
  auto m = cone_module(a);
  auto sum = direct_sum({m, m}).module;
  auto t = truncation_module(a, 2);
  ExtSpace space(sum, t);
  for (int trial = 0; trial < 20; ++trial) {
    auto alpha = random_class(space, space.min_degree(), rng).regraded(space.min_degree());
    auto s = pushout_extension(alpha);
    REQUIRE(s.verified);
    auto b = random_endo(HomDegree0(alpha.source, alpha.source), rng, f);
    CHECK(ext_class_equal(class_of(pullback(s, b)), ext_action(alpha, b)));
  }
}

TEST_CASE("phi and its inverse") {
  auto a = cone();
  std::mt19937_64 rng(11);
  auto m = cone_module(a);
  auto t = truncation_module(a, 2);
  auto one = direct_sum({m});
  ExtSpace s1(m, t);
  auto g = s1.basis()[0];
  auto parts = phi_split(g, one);
  CHECK(ext_class_equal(parts[0], g));

  auto ds = direct_sum({m, free_module(a, {0})});
  ExtSpace sp(ds.module, t);
  for (const auto& b : sp.basis()) {
    auto p = phi_split(b, ds);
    CHECK(ExtSpace(free_module(a, {0}), t).is_zero(p[1]));
  }
  auto d2 = direct_sum({m, m.shifted(1)});
  CHECK(ExtSpace(d2.module, t).dim() == s1.dim() + ExtSpace(m.shifted(1), t).dim());
  for (int trial = 0; trial < 10; ++trial) {
    auto x = random_class(s1, -1, rng);
    auto y = random_class(ExtSpace(m.shifted(1), t), -1, rng);
    auto inv = phi_inverse({x, y}, d2);
    auto back = phi_split(inv, d2);
    CHECK(ext_class_equal(back[0], x));
    CHECK(ext_class_equal(back[1], y));
    auto flat = direct_sum({m.shifted(-1), m});
    auto lit = phi_inverse_sequence({x.regraded(-1), y.regraded(-1)}, flat);
    CHECK(lit.verified);
    auto lit_class = class_of(lit);
    auto blk = phi_inverse({x.regraded(-1), y.regraded(-1)}, flat);
    CHECK(ext_class_equal(lit_class, blk));
  }
}

TEST_CASE("psi is a unital multiplicative matrix map") {
  auto a = cone();
  const auto& f = a->field();
  std::mt19937_64 rng(5);
  auto m = cone_module(a);
  auto ds = direct_sum({m, m, truncation_module(a, 2)});
  auto id = psi_matrix(ModuleMap::identity(ds.module), ds);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j)
        CHECK(maps_equal(id[i][j], ModuleMap::identity(ds.summands[i])));
      else
        CHECK(id[i][j].is_zero());
    }
  auto e11 = psi_matrix(compose(ds.iota[0], ds.pi[0]), ds);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(e11[i][j].is_zero() == (i != 0 || j != 0));
  HomDegree0 h(ds.module, ds.module);
  for (int trial = 0; trial < 10; ++trial) {
    auto b = random_endo(h, rng, f), c = random_endo(h, rng, f);
    auto pb = psi_matrix(b, ds), pc = psi_matrix(c, ds), pbc = psi_matrix(compose(b, c), ds);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        ModuleMap acc = ModuleMap::zero(ds.summands[j], ds.summands[i]);
        for (std::size_t k = 0; k < 3; ++k) acc = add(acc, compose(pb[i][k], pc[k][j]));
        CHECK(maps_equal(acc, pbc[i][j]));
      }
  }
}

TEST_CASE("split sequences have zero class and conversely") {
  auto a = cone();
  std::mt19937_64 rng(3);
  auto m = cone_module(a);
  auto t = truncation_module(a, 2);
  ExtSpace space(m, t);
  for (int trial = 0; trial < 6; ++trial) {
    auto c = random_class(space, -1, rng).regraded(-1);
    if (trial == 0) c = ExtClass::zero(c.source, c.target);
    auto s = pushout_extension(c);
    REQUIRE(s.verified);
    bool zero = ExtSpace(c.source, t).is_zero(c);
    CHECK(is_split(s) == zero);
    CHECK(ext_class_equal(class_of(s), c));
    auto again = pushout_extension(class_of(s));
    CHECK(ext_class_equal(class_of(again), c));
  }
}

TEST_CASE("phi of a pulled back class is phi times psi") {
  auto a = cone();
  const auto& f = a->field();
  std::mt19937_64 rng(17);
  auto m = cone_module(a);
  auto t = truncation_module(a, 2);
  auto ds = direct_sum({m, m.shifted(1), max_ideal(a)});
  ExtSpace space(ds.module, t);
  HomDegree0 h(ds.module, ds.module);
  for (int trial = 0; trial < 10; ++trial) {
    auto deg = space.min_degree() + static_cast<std::int32_t>(rng() % (space.max_degree() - space.min_degree() + 1));
    auto alpha = random_class(space, deg, rng);
    auto b = random_endo(h, rng, f);
    auto lhs = phi_split(ext_action(alpha, b), ds);
    auto rhs = row_times_matrix(phi_split(alpha, ds), psi_matrix(b, ds));
    REQUIRE(lhs.size() == rhs.size());
    for (std::size_t j = 0; j < lhs.size(); ++j) CHECK(ext_class_equal(lhs[j], rhs[j]));
  }
}
