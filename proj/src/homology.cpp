#include "ect/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ect {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), words_(rows * stride_, 0) {}

std::size_t BitMatrix::rank() const {
    std::vector<std::uint64_t> w = words_;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        const std::size_t word = col / 64;
        const std::uint64_t bit = 1ull << (col % 64);
        std::size_t piv = rank;
        while (piv < rows_ && !(w[piv * stride_ + word] & bit)) ++piv;
        if (piv == rows_) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < stride_; ++j)
                std::swap(w[piv * stride_ + j], w[rank * stride_ + j]);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == rank || !(w[r * stride_ + word] & bit)) continue;
            for (std::size_t j = word; j < stride_; ++j)
                w[r * stride_ + j] ^= w[rank * stride_ + j];
        }
        ++rank;
    }
    return rank;
}

namespace {

// Per-dimension index of the simplices of a complex.
std::vector<std::map<std::vector<std::size_t>, std::size_t>> simplices_by_dim(
    const SimplicialComplex& complex) {
    std::vector<std::map<std::vector<std::size_t>, std::size_t>> out(
        static_cast<std::size_t>(std::max(complex.dim(), 0)) + 1);
    if (complex.empty()) return out;
    for (const auto& c : complex.cells()) {
        auto& level = out[static_cast<std::size_t>(c.dim)];
        std::size_t idx = level.size();
        level.emplace(c.vertices, idx);
    }
    return out;
}

}  // namespace

BitMatrix boundary_matrix(const SimplicialComplex& complex, int k) {
    if (k < 1) throw std::invalid_argument("boundary matrix defined for k >= 1");
    auto index = simplices_by_dim(complex);
    const auto& rows_idx = index[static_cast<std::size_t>(k - 1)];
    const auto& cols_idx = index[static_cast<std::size_t>(k)];
    BitMatrix m(rows_idx.size(), cols_idx.size());
    for (const auto& [verts, col] : cols_idx) {
        for (std::size_t drop = 0; drop < verts.size(); ++drop) {
            std::vector<std::size_t> face;
            face.reserve(verts.size() - 1);
            for (std::size_t i = 0; i < verts.size(); ++i)
                if (i != drop) face.push_back(verts[i]);
            m.set(rows_idx.at(face), col);
        }
    }
    return m;
}

BettiVector betti_numbers(const SimplicialComplex& complex) {
    if (complex.empty()) return {};
    const int d = complex.dim();
    std::vector<std::size_t> counts(static_cast<std::size_t>(d) + 1, 0);
    for (const auto& c : complex.cells()) ++counts[static_cast<std::size_t>(c.dim)];
    std::vector<std::size_t> ranks(static_cast<std::size_t>(d) + 2, 0);
    for (int k = 1; k <= d; ++k)
        ranks[static_cast<std::size_t>(k)] = boundary_matrix(complex, k).rank();
    BettiVector betti(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        betti[ku] = counts[ku] - ranks[ku] - ranks[ku + 1];
    }
    return betti;
}

SimplicialComplex sublevel_subcomplex(const SimplicialComplex& complex,
                                      const std::vector<Rational>& vertex_values,
                                      const Rational& t) {
    if (vertex_values.size() != complex.vertices().size())
        throw std::invalid_argument("one value per vertex required");
    std::vector<std::size_t> remap(complex.vertices().size(), SIZE_MAX);
    std::vector<Point> verts;
    for (std::size_t i = 0; i < complex.vertices().size(); ++i) {
        if (vertex_values[i] <= t) {
            remap[i] = verts.size();
            verts.push_back(complex.vertices()[i]);
        }
    }
    std::vector<std::vector<std::size_t>> simplices;
    for (const auto& c : complex.cells()) {
        std::vector<std::size_t> s;
        s.reserve(c.vertices.size());
        bool keep = true;
        for (auto v : c.vertices) {
            if (remap[v] == SIZE_MAX) {
                keep = false;
                break;
            }
            s.push_back(remap[v]);
        }
        if (keep) simplices.push_back(std::move(s));
    }
    if (simplices.empty()) return SimplicialComplex{};  // empty sublevel set
    return SimplicialComplex::build(std::move(verts), simplices);
}

std::vector<Rational> vertex_heights(const SimplicialComplex& complex, const Direction& v) {
    std::vector<Rational> h;
    h.reserve(complex.vertices().size());
    for (const auto& p : complex.vertices()) h.push_back(dot(p, v));
    return h;
}

StepCurve betti_curve(const SimplicialComplex& complex, const Direction& v, int k) {
    if (k < 0) throw std::invalid_argument("negative homology degree");
    auto heights = vertex_heights(complex, v);
    return StepCurve::from_samples(heights, [&](const Rational& t) {
        auto sub = sublevel_subcomplex(complex, heights, t);
        auto betti = betti_numbers(sub);
        const auto ku = static_cast<std::size_t>(k);
        return ku < betti.size() ? Rational(Integer(betti[ku])) : Rational(0);
    });
}

SimplicialComplex triangulate(const CubicalComplex& complex) {
    const auto& extents = complex.extents();
    const std::size_t n = extents.size();
    std::vector<std::vector<std::size_t>> simplices;

    // Kuhn triangulation of each top box: one n-simplex per axis
    // permutation, walking from the low corner one axis at a time.
    std::vector<std::size_t> axis_order(n);
    std::iota(axis_order.begin(), axis_order.end(), 0);
    std::vector<std::size_t> box(n, 0);
    while (true) {
        std::vector<std::size_t> perm = axis_order;
        do {
            std::vector<std::size_t> corner = box;
            std::vector<std::size_t> simplex{complex.grid_vertex_id(corner)};
            for (auto axis : perm) {
                ++corner[axis];
                simplex.push_back(complex.grid_vertex_id(corner));
            }
            simplices.push_back(std::move(simplex));
        } while (std::next_permutation(perm.begin(), perm.end()));

        bool done = true;
        std::size_t a = n;
        while (a-- > 0) {
            if (++box[a] < extents[a]) {
                done = false;
                break;
            }
            box[a] = 0;
        }
        if (done) break;
    }
    return SimplicialComplex::build(complex.vertices(), simplices);
}

}  // namespace ect
