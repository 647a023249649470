#include "doctest.h"

#include <random>

#include "bigindec/findim.hpp"
#include "bigindec/homext.hpp"
#include "bigindec/oracle.hpp"
#include "bigindec/yoneda.hpp"
#include "fixtures.hpp"

using namespace bigindec;
using namespace fx;

TEST_CASE("oracle Ext dimensions are frozen") {
  auto p = plane();
  CHECK(oracle_ext_dim(max_ideal(p), 4) == 1);
  CHECK(oracle_ext_dim(free_module(p, {0, 3}), 4) == 0);
  CHECK(oracle_ext_dim(residue_field(p), 1) == 2);
  CHECK(oracle_ext_dim(residue_field(p), 2) == 3);
  CHECK(ExtSpace(residue_field(p), truncation_module(p, 2)).dim() == 3);

  auto a = cone();
  auto m = cone_module(a);
  // dim Ext^1(M, R/m^n) = 2n for the MCM module over the A1 cone
  const long frozen[] = {2, 4, 6, 8, 10, 12};
  for (int n = 1; n <= 6; ++n) CHECK(oracle_ext_dim(m, n) == frozen[n - 1]);
  CHECK(oracle_ext_dim(free_module(a, {0}), 3) == 0);
  CHECK_THROWS_AS(oracle_ext_dim(m, 0), Error);
}

TEST_CASE("oracle agrees with the Gröbner implementation") {
  auto a = cone();
  std::vector<GradedModule> mods{cone_module(a), max_ideal(a), residue_field(a), truncation_module(a, 2)};
  for (const auto& m : mods)
    for (int n = 1; n <= 4; ++n) CHECK(oracle_ext_dim(m, n) == static_cast<long>(ExtSpace(m, truncation_module(a, n)).dim()));
  auto p = plane();
  for (int n = 1; n <= 8; ++n) CHECK(oracle_ext_dim(max_ideal(p), n) == static_cast<long>(ExtSpace(max_ideal(p), truncation_module(p, n)).dim()));
  for (const auto& m : mods) CHECK(oracle_hom0_dim(m, m) == static_cast<long>(HomDegree0(m, m).dim()));
}

TEST_CASE("oracle split search matches the class") {
  auto a = cone();
  auto m = cone_module(a);
  auto t = truncation_module(a, 2);
  ExtSpace space(m, t);
  for (const auto& b : space.basis()) {
    if (b.degree != 0) continue;
    auto s = pushout_extension(b);
    auto v = oracle_split_search(s);
    CHECK(v.found == is_split(s));
    CHECK_FALSE(v.found);
  }
  auto zero = pushout_extension(ExtClass::zero(m, t));
  auto v = oracle_split_search(zero);
  REQUIRE(v.found);
  auto sigma = ModuleMap::make(m, zero.middle(), *v.section, 0);
  CHECK(maps_equal(compose(zero.pi, sigma), ModuleMap::identity(m)));
}

TEST_CASE("oracle idempotent search") {
  auto a = cone();
  auto m = cone_module(a);
  CHECK_FALSE(oracle_random_idempotent(m, 20, 7).found);
  auto mm = direct_sum({m, m}).module;
  auto v = oracle_random_idempotent(mm, 20, 7);
  REQUIRE(v.found);
  auto e = ModuleMap::make(mm, mm, *v.idempotent, 0);
  CHECK(maps_equal(compose(e, e), e));
  CHECK_FALSE(maps_equal(e, ModuleMap::identity(mm)));
  CHECK_FALSE(maps_equal(e, ModuleMap::zero(mm, mm)));
  CHECK_THROWS_AS(oracle_random_idempotent(m, 0, 7), Error);
}
