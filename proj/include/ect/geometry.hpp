#pragma once

#include "ect/rational.hpp"

#include <vector>

namespace ect {

// A point in R^n with exact rational coordinates.
using Point = std::vector<Rational>;

// A direction vector; rational, nonzero, not required to be unit-norm.
// Transforms depend only on the ray of a direction up to reparameterizing t.
using Direction = std::vector<Rational>;

Rational dot(const Point& x, const Direction& v);

bool is_zero_vector(const Direction& v);

enum class DirectionScheme { Axes, RationalGrid, Explicit };

// Deterministic direction sampling. `axes` cycles the coordinate axes;
// `rational_grid` emits pairwise non-parallel rational vectors
// (1, k, k^2, ...) for k = 0, 1, -1, 2, -2, ...
std::vector<Direction> sample_directions(int count, int ambient_dim, DirectionScheme scheme);

// Validates an explicit direction list (nonzero, consistent dimension).
std::vector<Direction> validate_directions(const std::vector<Direction>& dirs);

}  // namespace ect
