#include "ect/complex.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace ect {

int Complex::dim() const {
    int d = -1;
    for (const auto& c : cells_) d = std::max(d, c.dim);
    return d;
}

namespace {

// All nonempty subsets of a sorted vertex list (faces of a simplex).
void collect_faces(const std::vector<std::size_t>& verts,
                   std::set<std::vector<std::size_t>>& out) {
    const std::size_t n = verts.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> face;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) face.push_back(verts[i]);
        out.insert(std::move(face));
    }
}

}  // namespace

SimplicialComplex SimplicialComplex::build(
    std::vector<Point> vertices, const std::vector<std::vector<std::size_t>>& simplices) {
    if (simplices.empty()) throw std::invalid_argument("empty simplex set");
    if (vertices.empty()) throw std::invalid_argument("empty vertex list");
    const std::size_t n = vertices.front().size();
    for (const auto& p : vertices)
        if (p.size() != n) throw std::invalid_argument("inconsistent vertex dimensions");

    std::set<std::vector<std::size_t>> faces;
    for (const auto& s : simplices) {
        if (s.empty()) throw std::invalid_argument("empty simplex");
        std::vector<std::size_t> sorted = s;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("simplex with repeated vertex");
        for (auto v : sorted)
            if (v >= vertices.size()) throw std::invalid_argument("invalid vertex index");
        collect_faces(sorted, faces);
    }

    SimplicialComplex k;
    k.vertices_ = std::move(vertices);
    std::vector<std::vector<std::size_t>> ordered(faces.begin(), faces.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    for (auto& f : ordered) {
        Cell c;
        c.dim = static_cast<int>(f.size()) - 1;
        c.vertices = f;
        k.index_.emplace(f, k.cells_.size());
        k.cells_.push_back(std::move(c));
    }

    std::set<Point> seen;
    for (const auto& p : k.vertices_)
        if (!seen.insert(p).second) k.has_duplicate_coordinates_ = true;
    return k;
}

std::optional<std::size_t> SimplicialComplex::find_cell(
    std::vector<std::size_t> sorted_vertex_ids) const {
    std::sort(sorted_vertex_ids.begin(), sorted_vertex_ids.end());
    auto it = index_.find(sorted_vertex_ids);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

CubicalComplex::CubicalComplex(Point origin, std::vector<Rational> spacing,
                               std::vector<std::size_t> extents)
    : origin_(std::move(origin)), spacing_(std::move(spacing)), extents_(std::move(extents)) {
    const std::size_t n = extents_.size();
    if (n == 0) throw std::invalid_argument("cubical complex needs at least one axis");
    if (origin_.size() != n || spacing_.size() != n)
        throw std::invalid_argument("origin/spacing/extents dimension mismatch");
    for (auto e : extents_)
        if (e == 0) throw std::invalid_argument("zero extent");
    for (const auto& s : spacing_)
        if (s <= 0) throw std::invalid_argument("spacing must be positive");

    // Vertex table: grid points, row-major over (extents + 1).
    std::vector<std::size_t> vshape(n);
    for (std::size_t a = 0; a < n; ++a) vshape[a] = extents_[a] + 1;
    std::size_t vcount = 1;
    for (auto s : vshape) vcount *= s;
    vertices_.reserve(vcount);
    for (std::size_t flat = 0; flat < vcount; ++flat) {
        Point p(n);
        std::size_t rem = flat;
        for (std::size_t a = n; a-- > 0;) {
            std::size_t idx = rem % vshape[a];
            rem /= vshape[a];
            p[a] = origin_[a] + spacing_[a] * Rational(Integer(idx));
        }
        vertices_.push_back(std::move(p));
    }
    auto vertex_id = [&](const std::vector<std::size_t>& idx) {
        std::size_t flat = 0;
        for (std::size_t a = 0; a < n; ++a) flat = flat * vshape[a] + idx[a];
        return flat;
    };

    // Enumerate cells: per-axis (lower index, span). Deterministic order by
    // (dim, key).
    std::vector<std::vector<std::pair<std::size_t, int>>> keys;
    std::vector<std::pair<std::size_t, int>> key(n);
    std::function<void(std::size_t)> rec = [&](std::size_t axis) {
        if (axis == n) {
            keys.push_back(key);
            return;
        }
        for (int span = 0; span <= 1; ++span) {
            std::size_t limit = extents_[axis] + (span == 0 ? 1 : 0);
            for (std::size_t i = 0; i < limit; ++i) {
                key[axis] = {i, span};
                rec(axis + 1);
            }
        }
    };
    rec(0);
    std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (const auto& [i, s] : a) da += s;
        for (const auto& [i, s] : b) db += s;
        if (da != db) return da < db;
        return a < b;
    });

    top_cell_ids_.assign([&] {
        std::size_t c = 1;
        for (auto e : extents_) c *= e;
        return c;
    }(), 0);
    for (const auto& k : keys) {
        Cell c;
        c.dim = 0;
        for (const auto& [i, s] : k) c.dim += s;
        // closure vertices: corners of the box face
        std::vector<std::vector<std::size_t>> corners{{}};
        for (std::size_t a = 0; a < n; ++a) {
            std::vector<std::vector<std::size_t>> next;
            for (const auto& cidx : corners) {
                for (int d = 0; d <= k[a].second; ++d) {
                    auto e = cidx;
                    e.push_back(k[a].first + static_cast<std::size_t>(d));
                    next.push_back(std::move(e));
                }
            }
            corners = std::move(next);
        }
        for (const auto& cidx : corners) c.vertices.push_back(vertex_id(cidx));
        std::sort(c.vertices.begin(), c.vertices.end());
        if (c.dim == static_cast<int>(n)) {
            std::size_t flat = 0;
            for (std::size_t a = 0; a < n; ++a) flat = flat * extents_[a] + k[a].first;
            top_cell_ids_[flat] = cells_.size();
        }
        keys_.push_back(k);
        cells_.push_back(std::move(c));
    }
}

std::size_t CubicalComplex::grid_vertex_id(const std::vector<std::size_t>& idx) const {
    std::size_t flat = 0;
    for (std::size_t a = 0; a < extents_.size(); ++a) flat = flat * (extents_[a] + 1) + idx[a];
    return flat;
}

std::vector<std::size_t> CubicalComplex::incident_boxes(std::size_t cell_id) const {
    const auto& key = keys_[cell_id];
    const std::size_t n = extents_.size();
    // Per axis, the box index range whose closure contains the cell.
    std::vector<std::vector<std::size_t>> ranges(n);
    for (std::size_t a = 0; a < n; ++a) {
        const auto& [i, span] = key[a];
        if (span == 1) {
            ranges[a].push_back(i);
        } else {
            if (i > 0) ranges[a].push_back(i - 1);
            if (i < extents_[a]) ranges[a].push_back(i);
        }
    }
    std::vector<std::size_t> out;
    std::vector<std::size_t> pick(n, 0);
    while (true) {
        std::size_t flat = 0;
        for (std::size_t a = 0; a < n; ++a) flat = flat * extents_[a] + ranges[a][pick[a]];
        out.push_back(flat);
        bool done = true;
        std::size_t a = n;
        while (a-- > 0) {
            if (++pick[a] < ranges[a].size()) {
                done = false;
                break;
            }
            pick[a] = 0;
        }
        if (done) break;
    }
    return out;
}

}  // namespace ect
