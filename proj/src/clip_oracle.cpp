#include "ect/clip_oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace ect {

namespace {

using PointList = std::vector<Point>;

// Exact affine coordinates: maps points spanning an affine subspace of
// dimension d <= 3 to rational coordinates in R^d.
struct AffineChart {
    Point base;
    std::vector<Point> basis;  // linearly independent edge vectors

    int dim() const { return static_cast<int>(basis.size()); }

    std::vector<Rational> coords(const Point& x) const {
        const std::size_t d = basis.size();
        if (d == 0) return {};
        // Solve the Gram system B^T B y = B^T (x - base).
        std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1, Rational(0)));
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < base.size(); ++k) m[i][j] += basis[i][k] * basis[j][k];
            for (std::size_t k = 0; k < base.size(); ++k)
                m[i][d] += basis[i][k] * (x[k] - base[k]);
        }
        // Gaussian elimination, exact.
        for (std::size_t col = 0; col < d; ++col) {
            std::size_t piv = col;
            while (piv < d && m[piv][col] == 0) ++piv;
            if (piv == d) throw std::logic_error("singular Gram matrix");
            std::swap(m[piv], m[col]);
            for (std::size_t r = 0; r < d; ++r) {
                if (r == col || m[r][col] == 0) continue;
                Rational f = m[r][col] / m[col][col];
                for (std::size_t c2 = col; c2 <= d; ++c2) m[r][c2] -= f * m[col][c2];
            }
        }
        std::vector<Rational> y(d);
        for (std::size_t i = 0; i < d; ++i) y[i] = m[i][d] / m[i][i];
        return y;
    }
};

// Greedy exact rank construction of an affine chart over a point set.
AffineChart make_chart(const PointList& pts) {
    AffineChart chart;
    chart.base = pts.front();
    std::vector<std::vector<Rational>> rows;  // row-reduced copies of basis vectors
    for (const auto& p : pts) {
        std::vector<Rational> v(p.size());
        for (std::size_t k = 0; k < p.size(); ++k) v[k] = p[k] - chart.base[k];
        // reduce against accepted rows
        auto w = v;
        for (const auto& r : rows) {
            std::size_t lead = 0;
            while (lead < r.size() && r[lead] == 0) ++lead;
            if (lead < r.size() && w[lead] != 0) {
                Rational f = w[lead] / r[lead];
                for (std::size_t k = 0; k < w.size(); ++k) w[k] -= f * r[k];
            }
        }
        if (std::any_of(w.begin(), w.end(), [](const Rational& q) { return q != 0; })) {
            rows.push_back(w);
            chart.basis.push_back(std::move(v));
        }
    }
    return chart;
}

Rational det3(const std::vector<std::vector<Rational>>& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

// Facets of conv(pts) as index subsets, for affine dimension d of the set.
// Points are assumed to be in convex position (true for clipped simplices).
std::vector<std::vector<std::size_t>> hull_facets(const PointList& pts, const AffineChart& chart) {
    const std::size_t n = pts.size();
    std::vector<std::vector<Rational>> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = chart.coords(pts[i]);
    const int d = chart.dim();
    std::vector<std::vector<std::size_t>> facets;

    if (d == 1) {
        std::size_t lo = 0, hi = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (c[i][0] < c[lo][0]) lo = i;
            if (c[i][0] > c[hi][0]) hi = i;
        }
        facets.push_back({lo});
        facets.push_back({hi});
        return facets;
    }

    auto orient2 = [&](std::size_t i, std::size_t j, std::size_t k) {
        return (c[j][0] - c[i][0]) * (c[k][1] - c[i][1]) -
               (c[j][1] - c[i][1]) * (c[k][0] - c[i][0]);
    };

    if (d == 2) {
        // Each supporting line through a pair with all points on one side is
        // an edge of the polygon.
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                bool pos = false, neg = false;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == i || k == j) continue;
                    Rational o = orient2(i, j, k);
                    if (o > 0) pos = true;
                    if (o < 0) neg = true;
                }
                if (!(pos && neg)) facets.push_back({i, j});
            }
        }
        return facets;
    }

    // d == 3: brute-force supporting planes over triples.
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                std::vector<std::vector<Rational>> m(3, std::vector<Rational>(3));
                bool pos = false, neg = false, degenerate = false;
                for (std::size_t l = 0; l < n; ++l) {
                    if (l == i || l == j || l == k) continue;
                    for (std::size_t a = 0; a < 3; ++a) {
                        m[0][a] = c[j][a] - c[i][a];
                        m[1][a] = c[k][a] - c[i][a];
                        m[2][a] = c[l][a] - c[i][a];
                    }
                    Rational o = det3(m);
                    if (o > 0) pos = true;
                    if (o < 0) neg = true;
                }
                // triple must be affinely independent
                for (std::size_t a = 0; a < 3; ++a) {
                    m[0][a] = c[j][a] - c[i][a];
                    m[1][a] = c[k][a] - c[i][a];
                    m[2][a] = 0;
                }
                Rational cx = m[0][1] * m[1][2] - m[0][2] * m[1][1];
                Rational cy = m[0][2] * m[1][0] - m[0][0] * m[1][2];
                Rational cz = m[0][0] * m[1][1] - m[0][1] * m[1][0];
                degenerate = (cx == 0 && cy == 0 && cz == 0);
                if (degenerate || (pos && neg)) continue;
                // gather all points on the supporting plane
                std::vector<std::size_t> facet;
                for (std::size_t l = 0; l < n; ++l) {
                    Rational s = cx * (c[l][0] - c[i][0]) + cy * (c[l][1] - c[i][1]) +
                                 cz * (c[l][2] - c[i][2]);
                    if (s == 0) facet.push_back(l);
                }
                seen.insert(std::move(facet));
            }
        }
    }
    facets.assign(seen.begin(), seen.end());
    return facets;
}

// Pulling triangulation of conv(pts): apex = lexicographically smallest
// point, recursively over facets not containing the apex. Restriction to a
// face equals the pulling triangulation of that face, which makes
// triangulations of shared faces of neighboring clipped simplices agree.
std::vector<PointList> pulling_triangulation(PointList pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty()) return {};
    if (pts.size() == 1) return {pts};

    AffineChart chart = make_chart(pts);
    if (chart.dim() == 0) return {{pts.front()}};

    const Point apex = pts.front();  // lexicographic minimum after sort
    std::vector<PointList> out;
    for (const auto& facet_idx : hull_facets(pts, chart)) {
        PointList facet;
        bool has_apex = false;
        for (auto i : facet_idx) {
            if (pts[i] == apex) has_apex = true;
            facet.push_back(pts[i]);
        }
        if (has_apex) continue;
        for (auto piece : pulling_triangulation(std::move(facet))) {
            piece.push_back(apex);
            std::sort(piece.begin(), piece.end());
            out.push_back(std::move(piece));
        }
    }
    return out;
}

}  // namespace

long long chi_clipped_oracle(const SimplicialComplex& complex, const Direction& v,
                             const Rational& t) {
    if (complex.dim() > 3) throw std::invalid_argument("oracle restricted to <= 3");
    if (is_zero_vector(v)) throw std::invalid_argument("zero direction");

    std::vector<Rational> heights;
    heights.reserve(complex.vertices().size());
    for (const auto& p : complex.vertices()) heights.push_back(dot(p, v));

    // Global set of simplices keyed by sorted closure-vertex coordinates.
    std::set<PointList> simplices;

    for (const auto& cell : complex.cells()) {
        // clip vertex set: low vertices plus edge-hyperplane crossings
        PointList clip;
        const auto& vs = cell.vertices;
        for (auto vid : vs)
            if (heights[vid] <= t) clip.push_back(complex.vertices()[vid]);
        for (std::size_t i = 0; i < vs.size(); ++i) {
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                const Rational &hi_ = heights[vs[i]], &hj = heights[vs[j]];
                const Rational lo = hi_ < hj ? hi_ : hj;
                const Rational hi = hi_ < hj ? hj : hi_;
                if (lo < t && t < hi) {
                    Rational lambda = (t - hi_) / (hj - hi_);
                    const Point &a = complex.vertices()[vs[i]], &b = complex.vertices()[vs[j]];
                    Point x(a.size());
                    for (std::size_t k = 0; k < a.size(); ++k)
                        x[k] = a[k] + lambda * (b[k] - a[k]);
                    clip.push_back(std::move(x));
                }
            }
        }
        if (clip.empty()) continue;
        for (const auto& top : pulling_triangulation(std::move(clip))) {
            // face closure of each top simplex
            const std::size_t m = top.size();
            for (unsigned mask = 1; mask < (1u << m); ++mask) {
                PointList face;
                for (std::size_t i = 0; i < m; ++i)
                    if (mask & (1u << i)) face.push_back(top[i]);
                simplices.insert(std::move(face));
            }
        }
    }

    long long chi = 0;
    for (const auto& s : simplices) chi += (s.size() % 2 == 1) ? 1 : -1;
    return chi;
}

}  // namespace ect
