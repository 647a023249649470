#pragma once

#include "bigindec/workspace.hpp"

namespace fx {

using namespace bigindec;

inline RingPtr plane() { return GradedRing::create("P", kDefaultPrime, {"x", "y"}, {}, {}); }

inline RingPtr cone() {
  auto bare = GradedRing::create("A", kDefaultPrime, {"x", "y", "z"}, {}, {});
  return GradedRing::create("A", kDefaultPrime, {"x", "y", "z"}, {}, {parse_polynomial(*bare, "x*y - z^2")});
}

inline Polynomial poly(const RingPtr& r, const char* s) { return parse_polynomial(*r, s); }

/// coker [[x, z], [z, y]], the rank one MCM module over the A1 cone.
inline GradedModule cone_module(const RingPtr& a) { return parse_module(a, {0, 0}, {"x*e1 + z*e2", "z*e1 + y*e2"}); }

inline GradedModule max_ideal(const RingPtr& r) { return ideal_module(maximal_ideal(r)); }

inline GradedModule free_module(const RingPtr& r, std::vector<std::int32_t> d) { return GradedModule::free(r, d); }

}  // namespace fx
