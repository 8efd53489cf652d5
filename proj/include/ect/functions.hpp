#pragma once

#include "ect/complex.hpp"

#include <memory>
#include <vector>

namespace ect {

// Per-open-cell range of a linear or PL function over the cell closure.
// For a convex open cell the image is {lo} when constant, else (lo, hi).
struct CellSummary {
    int dim = 0;
    Rational lo;
    Rational hi;
    bool constant = false;
};

using CellSummaries = std::vector<CellSummary>;

// PL function on a simplicial complex, given by vertex values; affine on
// each closed simplex.
struct PLFunction {
    std::shared_ptr<const SimplicialComplex> complex;
    std::vector<Rational> vertex_values;  // indexed by vertex id

    Rational at_vertex(std::size_t v) const { return vertex_values.at(v); }
};

// Cell-wise constant function on a complex (the constructible/quantized g).
// support_bound W: all nonzero-value cells lie strictly inside the ball of
// radius W around the origin.
struct CellConstFunction {
    std::shared_ptr<const Complex> complex;
    std::vector<Rational> cell_values;  // indexed by cell id
    Rational support_bound = 1;

    CellConstFunction negated() const;
    CellConstFunction scaled(const Rational& c) const;
    bool integer_valued() const;
    // Sorted distinct values taken by the function.
    std::vector<Rational> value_set() const;
};

// Min/max of x.v over each open cell's closure vertices.
CellSummaries height_summaries(const Complex& complex, const Direction& v);

// Min/max of f over each closed simplex (exact: f is affine per simplex).
CellSummaries pl_summaries(const SimplicialComplex& complex, const PLFunction& f);

enum class LowerCellConvention { Upper, Lower };

struct ImageGrid {
    std::vector<std::size_t> shape;  // row-major
    std::vector<Rational> values;
};

struct CubicalImage {
    std::shared_ptr<const CubicalComplex> complex;
    CellConstFunction function;
};

// Builds the grid complex over `image` and the cell-wise constant function
// whose top cells carry pixel values; lower cells take the max (Upper) or
// min (Lower) of their incident top cells.
CubicalImage build_cubical_complex(const ImageGrid& image, const Point& origin,
                                   const std::vector<Rational>& spacing,
                                   LowerCellConvention convention = LowerCellConvention::Upper);

// Strict L1-based support bound for the nonzero cells of g.
Rational compute_support_bound(const Complex& complex, const std::vector<Rational>& cell_values);

// Indicator function of a whole complex (g = 1 on every cell).
CellConstFunction indicator(std::shared_ptr<const Complex> complex);

}  // namespace ect
