#include "doctest.h"

#include "bigindec/oracle.hpp"
#include "bigindec/pipeline.hpp"
#include "fixtures.hpp"

using namespace bigindec;
using namespace fx;

namespace {

bool reassembles(const GradedModule& m, const std::vector<Summand>& parts) {
  ModuleMap acc = ModuleMap::zero(m, m);
  for (const auto& p : parts) {
    if (!maps_equal(compose(p.projection, p.inclusion), ModuleMap::identity(p.module))) return false;
    acc = add(acc, compose(p.inclusion, p.projection));
  }
  return maps_equal(acc, ModuleMap::identity(m));
}

}  // namespace

TEST_CASE("Ext length tables and their polynomial fit") {
  auto p = plane();
  auto fm = ghp_fit(max_ideal(p), 8);
  for (long x : fm.lengths) CHECK(x == 1);
  CHECK(fm.degree == 0);
  CHECK_FALSE(fm.degree_is_dim_minus_one);
  CHECK(fm.max_nu == 1);

  auto fr = ghp_fit(free_module(p, {0}), 4);
  for (long x : fr.lengths) CHECK(x == 0);
  CHECK(fr.s == 0);

  auto a = cone();
  auto fit = ghp_fit(cone_module(a), 8);
  // lengths 2n, the oracle's frozen values
  for (int n = 1; n <= 8; ++n) CHECK(fit.lengths[n - 1] == 2 * n);
  for (int n = 1; n <= 5; ++n) CHECK(oracle_ext_dim(cone_module(a), n) == fit.lengths[n - 1]);
  CHECK(fit.degree == 1);
  CHECK(fit.degree_is_dim_minus_one);
  CHECK(fit.slope == 2);
  CHECK(fit.intercept == 0);
  CHECK(fit.s == 1);
  CHECK(fit.t == 1);
  for (int n = fit.stable_from; n <= 8; ++n) CHECK(fit.evaluate(n) == fit.lengths[n - 1]);
}

TEST_CASE("janet_bound examples and soundness") {
  CHECK(janet_bound(1, 1, 0, 1, 3) == 4);
  CHECK(janet_bound(1, 1, 0, 1, 0) == 1);
  CHECK(janet_bound(2, 3, -1, 2, 2) == 4);
  CHECK(janet_bound(1, 2, 100, 1, 5) == 1);
  CHECK_THROWS_AS(janet_bound(0, 1, 0, 1, 1), Error);
  CHECK_THROWS_AS(janet_bound(1, 0, 0, 1, 1), Error);
  // the bound is sound: the inequality holds at n and fails at n - 1
  for (long h = 0; h < 10; ++h) {
    int n = janet_bound(2, 3, -1, 2, h);
    CHECK(3 * n - 1 >= 2 * (2 * h + 1));
    if (n > 1) CHECK(3 * (n - 1) - 1 < 2 * (2 * h + 1));
  }
}

TEST_CASE("decomposition into indecomposables") {
  auto a = cone();
  auto m = cone_module(a);
  auto mm = direct_sum({m, m}).module;
  auto parts = decompose(mm);
  REQUIRE(parts.size() == 2);
  CHECK(reassembles(mm, parts));
  for (const auto& q : parts) CHECK(q.module.num_generators() == 2);

  auto kr = direct_sum({residue_field(a), free_module(a, {0})}).module;
  auto kp = decompose(kr);
  REQUIRE(kp.size() == 2);
  CHECK(reassembles(kr, kp));
  std::vector<long> lengths;
  for (const auto& q : kp) lengths.push_back(length_and_hilbert(q.module).finite ? length_and_hilbert(q.module).length : -1);
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths == std::vector<long>{-1, 1});

  CHECK(decompose(m).size() == 1);
  CHECK_THROWS_AS(decompose(GradedModule::free(a, {})), Error);
}

TEST_CASE("canonical seeds") {
  auto a = cone();
  auto s = canonical_seed(a);
  CHECK(s.depth == 2);
  CHECK(s.rank == 1);
  CHECK(s.warnings.empty());
  CHECK(oracle_ext_dim(s.module, 2) == 4);

  auto p = plane();
  auto sp = canonical_seed(p);
  CHECK(sp.module.relations().cols() == 0);
  CHECK(sp.module.degrees() == std::vector<std::int32_t>{2});
  CHECK_FALSE(sp.warnings.empty());

  auto bare = GradedRing::create("D", kDefaultPrime, {"x"}, {}, {});
  auto dual = GradedRing::create("D", kDefaultPrime, {"x"}, {}, {poly(bare, "x^2")});
  CHECK_THROWS_AS(canonical_seed(dual), Error);
}

TEST_CASE("generator selection") {
  auto a = cone();
  auto m = cone_module(a);
  auto s2 = select_generators(m, 2, 12);
  CHECK(s2.n == 2);
  CHECK(s2.nu == 4);
  CHECK(s2.premise);
  CHECK(s2.generators.size() == 2);
  auto s4 = select_generators(m, 4, 12);
  CHECK(s4.n == 3);
  CHECK(s4.premise);

  try {
    select_generators(free_module(a, {0}), 2, 12);
    FAIL("expected exhaustion");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SearchExhausted);
  }
  auto p = plane();
  try {
    select_generators(max_ideal(p), 2, 6);
    FAIL("expected exhaustion");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SearchExhausted);
  }
  CHECK_THROWS_AS(select_generators(direct_sum({m, m}).module, 2, 12), Error);
  CHECK_THROWS_AS(select_generators(residue_field(a), 2, 12), Error);
}

TEST_CASE("construction certificates") {
  auto a = cone();
  auto m = cone_module(a);
  int previous_rank = 0;
  for (int r = 2; r <= 4; ++r) {
    auto c = construct_big_indecomposable(m, r);
    CHECK(c.valid);
    CHECK(c.failing.empty());
    CHECK(c.verdicts.rank.t == r);
    CHECK(c.depth_x == 0);
    CHECK(c.depth_sum == c.depth_m);
    CHECK_FALSE(c.oracle.split_found);
    CHECK_FALSE(c.oracle.idempotent_found);
    CHECK(minimal_presentation(c.sequence.middle()).nu() >= static_cast<std::size_t>(r) * 2);
    CHECK(c.verdicts.rank.t > previous_rank);
    previous_rank = c.verdicts.rank.t;
  }
}

TEST_CASE("a repeated generator breaks the premise and the conclusion") {
  auto a = cone();
  auto m = cone_module(a);
  auto t = truncation_module(a, 2);
  ExtSpace space(m, t);
  ExtClass g = space.basis()[0];
  auto part = g.regraded(g.degree);
  auto ds = direct_sum({part.source, part.source});
  auto alpha = phi_inverse({part, part}, ds);
  auto seq = pushout_extension(alpha);
  REQUIRE(seq.verified);
  CHECK_FALSE(is_split(seq));
  ReducedEnd red = reduce_mod_m(end_algebra(m), annihilator_exponent(m));
  CHECK_FALSE(class_annihilator(alpha, ds, red).contained);
  CHECK_FALSE(locality_and_idempotents(degree_zero_endomorphisms(seq.middle()).algebra).local);
  CHECK(oracle_random_idempotent(seq.middle(), 50, 3).found);
  CHECK(decompose(seq.middle()).size() == 2);
}

TEST_CASE("depth of split sequences") {
  auto a = cone();
  auto m = cone_module(a);
  auto p = plane();
  std::vector<std::pair<GradedModule, GradedModule>> cases{
      {m, m.shifted(1)}, {max_ideal(p), max_ideal(p)}, {residue_field(p), residue_field(p)}, {m, free_module(a, {0})}};
  for (const auto& [x, y] : cases) {
    REQUIRE(depth(x) == depth(y));
    CHECK(depth(direct_sum({x, y}).module) == depth(x));
  }
}
