#include "ect/functions.hpp"

#include <algorithm>
#include <stdexcept>

namespace ect {

CellConstFunction CellConstFunction::negated() const {
    CellConstFunction g = *this;
    for (auto& v : g.cell_values) v = -v;
    return g;
}

CellConstFunction CellConstFunction::scaled(const Rational& c) const {
    CellConstFunction g = *this;
    for (auto& v : g.cell_values) v *= c;
    return g;
}

bool CellConstFunction::integer_valued() const {
    return std::all_of(cell_values.begin(), cell_values.end(),
                       [](const Rational& v) { return den(v) == 1; });
}

std::vector<Rational> CellConstFunction::value_set() const {
    std::vector<Rational> vals = cell_values;
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

CellSummaries height_summaries(const Complex& complex, const Direction& v) {
    if (is_zero_vector(v)) throw std::invalid_argument("zero direction");
    if (!complex.vertices().empty() && v.size() != complex.ambient_dim())
        throw std::invalid_argument("direction dimension mismatch");
    std::vector<Rational> heights;
    heights.reserve(complex.vertices().size());
    for (const auto& p : complex.vertices()) heights.push_back(dot(p, v));

    CellSummaries out;
    out.reserve(complex.cells().size());
    for (const auto& c : complex.cells()) {
        CellSummary s;
        s.dim = c.dim;
        s.lo = s.hi = heights[c.vertices.front()];
        for (std::size_t i = 1; i < c.vertices.size(); ++i) {
            const Rational& h = heights[c.vertices[i]];
            if (h < s.lo) s.lo = h;
            if (h > s.hi) s.hi = h;
        }
        s.constant = (s.lo == s.hi);
        out.push_back(std::move(s));
    }
    return out;
}

CellSummaries pl_summaries(const SimplicialComplex& complex, const PLFunction& f) {
    if (f.vertex_values.size() != complex.vertices().size())
        throw std::invalid_argument("PL function missing vertex values");
    CellSummaries out;
    out.reserve(complex.cells().size());
    for (const auto& c : complex.cells()) {
        CellSummary s;
        s.dim = c.dim;
        s.lo = s.hi = f.vertex_values[c.vertices.front()];
        for (std::size_t i = 1; i < c.vertices.size(); ++i) {
            const Rational& h = f.vertex_values[c.vertices[i]];
            if (h < s.lo) s.lo = h;
            if (h > s.hi) s.hi = h;
        }
        s.constant = (s.lo == s.hi);
        out.push_back(std::move(s));
    }
    return out;
}

Rational compute_support_bound(const Complex& complex, const std::vector<Rational>& cell_values) {
    Rational max_l1 = 0;
    bool any = false;
    for (std::size_t i = 0; i < complex.cells().size(); ++i) {
        if (cell_values[i] == 0) continue;
        any = true;
        for (auto vid : complex.cells()[i].vertices) {
            Rational l1 = 0;
            for (const auto& x : complex.vertices()[vid]) l1 += rational_abs(x);
            if (l1 > max_l1) max_l1 = l1;
        }
    }
    // L1 >= L2, so everything nonzero is strictly inside radius max_l1 + 1.
    return any ? max_l1 + 1 : Rational(1);
}

CubicalImage build_cubical_complex(const ImageGrid& image, const Point& origin,
                                   const std::vector<Rational>& spacing,
                                   LowerCellConvention convention) {
    if (image.shape.empty()) throw std::invalid_argument("empty image shape");
    std::size_t count = 1;
    for (auto s : image.shape) count *= s;
    if (count == 0 || image.values.size() != count)
        throw std::invalid_argument("inconsistent grid shape");

    auto cx = std::make_shared<CubicalComplex>(origin, spacing, image.shape);
    std::vector<Rational> cell_values(cx->cells().size());
    const int top_dim = static_cast<int>(image.shape.size());
    for (std::size_t id = 0; id < cx->cells().size(); ++id) {
        if (cx->cells()[id].dim == top_dim) continue;  // filled via top_cell_id below
        auto boxes = cx->incident_boxes(id);
        Rational v = image.values[boxes.front()];
        for (std::size_t j = 1; j < boxes.size(); ++j) {
            const Rational& w = image.values[boxes[j]];
            if (convention == LowerCellConvention::Upper ? (w > v) : (w < v)) v = w;
        }
        cell_values[id] = v;
    }
    for (std::size_t b = 0; b < count; ++b) cell_values[cx->top_cell_id(b)] = image.values[b];

    CellConstFunction g;
    g.complex = cx;
    g.support_bound = compute_support_bound(*cx, cell_values);
    g.cell_values = std::move(cell_values);
    return CubicalImage{cx, std::move(g)};
}

CellConstFunction indicator(std::shared_ptr<const Complex> complex) {
    CellConstFunction g;
    g.cell_values.assign(complex->cells().size(), Rational(1));
    g.support_bound = compute_support_bound(*complex, g.cell_values);
    g.complex = std::move(complex);
    return g;
}

}  // namespace ect
