#pragma once

#include <random>
#include <string>

#include "bigindec/homext.hpp"
#include "bigindec/workspace.hpp"

namespace fx {

using namespace bigindec;

inline Coeff rand_coeff(std::mt19937_64& rng, const PrimeField& f) {
  return static_cast<Coeff>(rng() % f.characteristic());
}

/// Random class of a fixed internal degree, as a combination of basis classes.
inline ExtClass random_class(const ExtSpace& space, std::int32_t degree, std::mt19937_64& rng) {
  const auto& f = space.target().r().field();
  ExtClass acc = ExtClass::zero(space.source(), space.target(), degree);
  for (const auto& b : space.basis())
    if (b.degree == degree) acc = add(acc, scale(b, rand_coeff(rng, f)));
  return acc;
}

inline ModuleMap random_endo(const HomDegree0& h, std::mt19937_64& rng, const PrimeField& f) {
  std::vector<Coeff> c(h.dim());
  for (auto& x : c) x = rand_coeff(rng, f);
  return h.combination(c);
}

/// Multiplication by a variable on every generator, a map of degree 1.
inline ModuleMap mult_by(const GradedModule& m, const char* var) {
  std::vector<std::string> cols;
  for (std::size_t i = 0; i < m.num_generators(); ++i) cols.push_back(std::string(var) + "*e" + std::to_string(i + 1));
  PolyMatrix mat = parse_relations(m.r(), m.degrees(), cols);
  return ModuleMap::make(m, m, mat, 1);
}

}  // namespace fx
