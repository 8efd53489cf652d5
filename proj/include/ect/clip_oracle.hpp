#pragma once

#include "ect/complex.hpp"

namespace ect {

// Independent oracle for chi(S_t^v) on complexes of dimension <= 3:
// geometrically clips each closed simplex by {x.v <= t}, triangulates each
// clipped polytope with a pulling triangulation in global lexicographic
// vertex order (consistent across shared faces), merges shared faces by
// exact coordinates, and evaluates the alternating open-cell count on the
// result. Deliberately shares no code with the per-cell chi rule.
long long chi_clipped_oracle(const SimplicialComplex& complex, const Direction& v,
                             const Rational& t);

}  // namespace ect
