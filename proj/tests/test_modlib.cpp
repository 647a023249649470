#include "doctest.h"

#include "bigindec/homext.hpp"
#include "fixtures.hpp"

using namespace bigindec;
using namespace fx;

TEST_CASE("minimal presentation drops redundant generators") {
  auto r = plane();
  auto m = parse_module(r, {1, 1, 1}, {"x*e2 - y*e1", "e3 - e1 - e2"});
  auto mp = minimal_presentation(m);
  CHECK(mp.nu() == 2);
  CHECK(mp.module.is_minimal());
  CHECK(compose(mp.from_minimal, mp.to_minimal).matrix.cols() == 3);
  CHECK(maps_equal(compose(mp.to_minimal, mp.from_minimal), ModuleMap::identity(mp.module)));
  CHECK(minimal_presentation(free_module(r, {1, 1})).nu() == 2);
  auto c = minimal_presentation(cone_module(cone()));
  CHECK(c.nu() == 2);
  CHECK(c.module.relations().cols() == 2);
}

TEST_CASE("kernel and cokernel of small maps") {
  auto r = plane();
  auto x = ModuleMap::make(free_module(r, {1}), free_module(r, {0}), parse_relations(*r, {0}, {"x*e1"}), 0);
  auto d = map_kernel_cokernel(x);
  CHECK(d.kernel.module.is_zero());
  CHECK(length_and_hilbert(d.cokernel).finite == false);
  CHECK(hilbert_value(d.cokernel, 3) == 1);

  auto xy = ModuleMap::make(free_module(r, {1, 1}), free_module(r, {0}), parse_relations(*r, {0}, {"x*e1", "y*e1"}), 0);
  auto k = map_kernel_cokernel(xy);
  REQUIRE(k.kernel.module.num_generators() == 1);
  CHECK(k.kernel.module.degrees()[0] == 2);
  CHECK(length_and_hilbert(k.cokernel).length == 1);

  auto zero = ModuleMap::zero(free_module(r, {0, 1}), free_module(r, {0}));
  auto z = map_kernel_cokernel(zero);
  CHECK(z.kernel.module.num_generators() == 2);
  CHECK(z.image.is_zero());
}

TEST_CASE("Koszul resolution of the residue field") {
  auto r = plane();
  auto res = free_resolution(residue_field(r), 3);
  CHECK(res.betti() == std::vector<std::size_t>{1, 2, 1, 0});
  auto o2 = syzygy(residue_field(r), 2);
  CHECK(o2.num_generators() == 1);
  CHECK(o2.degrees()[0] == 2);
  CHECK(o2.relations().cols() == 0);
  for (std::size_t i = 1; i < res.length(); ++i)
    CHECK(multiply(res.differentials[i - 1], res.differentials[i], *r).is_zero());
}

TEST_CASE("matrix factorization resolution is periodic") {
  auto a = cone();
  auto res = free_resolution(cone_module(a), 5);
  CHECK(res.betti() == std::vector<std::size_t>(6, 2));
  for (std::size_t i = 1; i < res.length(); ++i)
    CHECK(multiply(res.differentials[i - 1], res.differentials[i], *a).is_zero());
  CHECK(free_resolution(free_module(a, {0}), 2).betti() == std::vector<std::size_t>{1, 0, 0});
}

TEST_CASE("direct sum identities") {
  auto a = cone();
  auto m = cone_module(a);
  auto ds = direct_sum({m, m.shifted(1), residue_field(a)});
  CHECK(minimal_presentation(ds.module).nu() == 5);
  ModuleMap total = ModuleMap::zero(ds.module, ds.module);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      auto c = compose(ds.pi[i], ds.iota[j]);
      if (i == j)
        CHECK(maps_equal(c, ModuleMap::identity(ds.summands[i])));
      else
        CHECK(c.is_zero());
    }
    total = add(total, compose(ds.iota[i], ds.pi[i]));
  }
  CHECK(maps_equal(total, ModuleMap::identity(ds.module)));
  auto r = plane();
  CHECK(minimal_presentation(direct_sum({max_ideal(r), free_module(r, {0})}).module).nu() == 3);
}

TEST_CASE("lengths and Hilbert functions") {
  auto r = plane();
  for (int n = 1; n <= 8; ++n) {
    auto l = length_and_hilbert(truncation_module(r, n));
    CHECK(l.finite);
    CHECK(l.length == n * (n + 1) / 2);
  }
  CHECK_FALSE(length_and_hilbert(max_ideal(r)).finite);
  auto s3 = GradedRing::create("S", kDefaultPrime, {"x", "y", "z"}, {}, {});
  CHECK(length_and_hilbert(truncation_module(s3, 2)).length == 4);
  auto a = cone();
  auto t2 = length_and_hilbert(truncation_module(a, 2));
  CHECK(t2.length == 4);
  CHECK(t2.hilbert == std::map<std::int32_t, long>{{0, 1}, {1, 3}});
  CHECK_THROWS_AS(truncation_module(r, 0), Error);
}

TEST_CASE("finite length submodule") {
  auto r = plane();
  auto m = direct_sum({residue_field(r), free_module(r, {0})}).module;
  auto h = finite_length_submodule(m);
  CHECK(length_and_hilbert(h.h0).length == 1);
  CHECK(minimal_presentation(h.quotient).nu() == 1);
  CHECK(minimal_presentation(h.quotient).module.relations().cols() == 0);
  CHECK(finite_length_submodule(h.quotient).h0.is_zero());
  CHECK(finite_length_submodule(max_ideal(r)).h0.is_zero());
  auto x2 = parse_module(r, {0}, {"x^2*e1"});
  auto h2 = finite_length_submodule(direct_sum({x2, truncation_module(r, 3)}).module);
  CHECK(length_and_hilbert(h2.h0).length == 6);
  CHECK(finite_length_submodule(h2.quotient).h0.is_zero());
}

TEST_CASE("depth via Ext of the residue field") {
  auto r = plane();
  CHECK(depth(free_module(r, {0})) == 2);
  CHECK(depth(residue_field(r)) == 0);
  CHECK(depth(max_ideal(r)) == 1);
  auto a = cone();
  CHECK(depth(free_module(a, {0})) == 2);
  CHECK(depth(cone_module(a)) == 2);
  auto m = cone_module(a);
  CHECK(depth(direct_sum({m, m}).module) == depth(m));
  CHECK(depth(truncation_module(a, 3)) == 0);
  CHECK_THROWS_AS(depth(GradedModule::free(a, {})), Error);
}

TEST_CASE("Fitting ideals") {
  auto r = plane();
  auto m = max_ideal(r);
  CHECK(fitting_ideal(m, 0).is_zero());
  CHECK(fitting_ideal(m, 1).equals(maximal_ideal(r)));
  CHECK(fitting_ideal(m, 2).is_unit());
  auto f2 = free_module(r, {0, 0});
  CHECK(fitting_ideal(f2, 1).is_zero());
  CHECK(fitting_ideal(f2, 2).is_unit());
  for (int n = 1; n <= 4; ++n) CHECK(fitting_ideal(truncation_module(r, n), 0).equals(power_of_maximal(r, n)));
}

TEST_CASE("punctured rank certificates") {
  auto r = plane();
  CHECK(rank_punctured_certificate(max_ideal(r), 1).pass);
  auto c2 = rank_punctured_certificate(free_module(r, {0, 0}), 2);
  CHECK(c2.pass);
  auto t = truncation_module(r, 3);
  CHECK(rank_punctured_certificate(t, 0).pass);
  auto bad = rank_punctured_certificate(t, 1);
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.reason.empty());
  auto a = cone();
  auto prime = IdealHandle(a, {poly(a, "x"), poly(a, "z")});
  auto c = rank_punctured_certificate(cone_module(a), 1, {{"p", prime}});
  CHECK(c.pass);
  REQUIRE(c.witnesses.size() == 1);
  CHECK(c.witnesses[0].local_rank == 1);
  CHECK(local_rank_at(cone_module(a), prime) == 1);
}

TEST_CASE("Nakayama: generator count equals dim Hom(M, k)") {
  auto a = cone();
  for (const auto& m : {cone_module(a), truncation_module(a, 3), syzygy(residue_field(a), 2)}) {
    auto hom = ext_module(m, residue_field(a), 0);
    CHECK(static_cast<long>(minimal_presentation(m).nu()) == length_and_hilbert(hom.module).length);
  }
}
