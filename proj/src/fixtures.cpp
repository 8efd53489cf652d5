#include "ect/fixtures.hpp"

#include "ect/homology.hpp"

#include <cmath>
#include <stdexcept>

namespace ect {
namespace fixtures {

namespace {

constexpr long long kDenom = 1 << 20;

Rational q(long long p, long long d = 1) { return Rational(Integer(p), Integer(d)); }

}  // namespace

std::shared_ptr<SimplicialComplex> disk_mesh(int boundary_vertices) {
    if (boundary_vertices < 3) throw std::invalid_argument("need >= 3 boundary vertices");
    std::vector<Point> verts;
    verts.push_back({q(0), q(0)});  // center
    for (int i = 0; i < boundary_vertices; ++i) {
        double theta = 2.0 * M_PI * i / boundary_vertices;
        verts.push_back({quantize(std::cos(theta), kDenom), quantize(std::sin(theta), kDenom)});
    }
    std::vector<std::vector<std::size_t>> tris;
    for (int i = 0; i < boundary_vertices; ++i) {
        std::size_t a = 1 + static_cast<std::size_t>(i);
        std::size_t b = 1 + static_cast<std::size_t>((i + 1) % boundary_vertices);
        tris.push_back({0, a, b});
    }
    auto mesh = std::make_shared<SimplicialComplex>(SimplicialComplex::build(std::move(verts), tris));

    // convexity of the boundary polygon (exact); sublevel sets are then
    // convex for every direction
    const auto& vs = mesh->vertices();
    const std::size_t n = static_cast<std::size_t>(boundary_vertices);
    for (std::size_t i = 0; i < n; ++i) {
        const Point &a = vs[1 + i], &b = vs[1 + (i + 1) % n], &c = vs[1 + (i + 2) % n];
        Rational cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
        if (cross <= 0) throw std::logic_error("disk fixture lost convexity under quantization");
    }
    return mesh;
}

namespace {

// 8 ring positions of the square of half-width r, counterclockwise.
std::vector<Point> square_ring(long long r) {
    return {{q(r), q(0)},  {q(r), q(r)},   {q(0), q(r)},  {q(-r), q(r)},
            {q(-r), q(0)}, {q(-r), q(-r)}, {q(0), q(-r)}, {q(r), q(-r)}};
}

}  // namespace

std::shared_ptr<SimplicialComplex> annulus_mesh() {
    std::vector<Point> verts = square_ring(2);  // outer: ids 0..7
    for (auto& p : square_ring(1)) verts.push_back(p);  // inner: ids 8..15
    std::vector<std::vector<std::size_t>> tris;
    for (std::size_t i = 0; i < 8; ++i) {
        std::size_t o0 = i, o1 = (i + 1) % 8, i0 = 8 + i, i1 = 8 + (i + 1) % 8;
        tris.push_back({o0, o1, i0});
        tris.push_back({o1, i1, i0});
    }
    return std::make_shared<SimplicialComplex>(SimplicialComplex::build(std::move(verts), tris));
}

std::shared_ptr<SimplicialComplex> torus_mesh() {
    std::vector<Point> verts;
    for (long long z = 0; z <= 1; ++z) {
        for (auto ring : {square_ring(2), square_ring(1)}) {
            for (auto& p : ring) {
                p.push_back(q(z));
                verts.push_back(std::move(p));
            }
        }
    }
    // ids: z * 16 + (0..7 outer, 8..15 inner)
    auto outer = [](long long z, std::size_t i) { return static_cast<std::size_t>(z) * 16 + i % 8; };
    auto inner = [](long long z, std::size_t i) {
        return static_cast<std::size_t>(z) * 16 + 8 + i % 8;
    };
    std::vector<std::vector<std::size_t>> tris;
    for (std::size_t i = 0; i < 8; ++i) {
        for (long long z = 0; z <= 1; ++z) {
            // top/bottom annulus sheets
            tris.push_back({outer(z, i), outer(z, i + 1), inner(z, i)});
            tris.push_back({outer(z, i + 1), inner(z, i + 1), inner(z, i)});
        }
        // outer wall
        tris.push_back({outer(0, i), outer(0, i + 1), outer(1, i)});
        tris.push_back({outer(0, i + 1), outer(1, i + 1), outer(1, i)});
        // inner wall
        tris.push_back({inner(0, i), inner(0, i + 1), inner(1, i)});
        tris.push_back({inner(0, i + 1), inner(1, i + 1), inner(1, i)});
    }
    return std::make_shared<SimplicialComplex>(SimplicialComplex::build(std::move(verts), tris));
}

std::shared_ptr<SimplicialComplex> ball3_mesh() {
    CubicalComplex cube({q(0), q(0), q(0)}, {q(1), q(1), q(1)}, {1, 1, 1});
    return std::make_shared<SimplicialComplex>(triangulate(cube));
}

CubicalImage two_pixel_image(LowerCellConvention convention) {
    ImageGrid img;
    img.shape = {2, 1};
    img.values = {q(1), q(3)};
    return build_cubical_complex(img, {q(0), q(0)}, {q(1), q(1)}, convention);
}

CubicalImage checkerboard_image(std::size_t side, LowerCellConvention convention) {
    ImageGrid img;
    img.shape = {side, side};
    for (std::size_t r = 0; r < side; ++r)
        for (std::size_t c = 0; c < side; ++c) img.values.push_back(q((r + c) % 2));
    return build_cubical_complex(img, {q(0), q(0)}, {q(1), q(1)}, convention);
}

std::vector<PLFunction> fixture_pl_functions(std::shared_ptr<const SimplicialComplex> mesh) {
    const auto& vs = mesh->vertices();
    const std::size_t n = mesh->ambient_dim();
    std::vector<PLFunction> out;

    auto linear = [&](std::vector<Rational> coeffs) {
        PLFunction f{mesh, {}};
        for (const auto& p : vs) {
            Rational v = 0;
            for (std::size_t i = 0; i < n; ++i) v += coeffs[i] * p[i];
            f.vertex_values.push_back(v);
        }
        return f;
    };
    std::vector<Rational> ex(n, q(0)), ey(n, q(0)), diag(n, q(1));
    ex[0] = 1;
    if (n > 1) ey[1] = 1;
    out.push_back(linear(ex));
    out.push_back(linear(n > 1 ? ey : ex));
    out.push_back(linear(diag));

    PLFunction radial{mesh, {}}, saddle{mesh, {}};
    for (const auto& p : vs) {
        Rational r2 = 0;
        for (const auto& c : p) r2 += c * c;
        radial.vertex_values.push_back(r2);
        Rational s = p[0] * p[0];
        if (n > 1) s -= p[1] * p[1];
        saddle.vertex_values.push_back(s);
    }
    out.push_back(std::move(radial));
    out.push_back(std::move(saddle));
    return out;
}

std::shared_ptr<SimplicialComplex> random_subcomplex(std::mt19937_64& rng) {
    const bool three_d = (rng() % 2) == 0;
    std::shared_ptr<SimplicialComplex> base;
    if (three_d) {
        CubicalComplex grid({q(0), q(0), q(0)}, {q(1), q(1), q(1)}, {2, 2, 2});
        base = std::make_shared<SimplicialComplex>(triangulate(grid));
    } else {
        CubicalComplex grid({q(0), q(0)}, {q(1), q(1)}, {4, 4});
        base = std::make_shared<SimplicialComplex>(triangulate(grid));
    }
    // pick a few random cells; face closure stays under ~50 simplices
    const std::size_t picks = 2 + rng() % 2;  // face closure stays <= 50 simplices
    std::vector<std::vector<std::size_t>> chosen;
    for (std::size_t i = 0; i < picks; ++i)
        chosen.push_back(base->cells()[rng() % base->cells().size()].vertices);
    return std::make_shared<SimplicialComplex>(
        SimplicialComplex::build(base->vertices(), chosen));
}

CellConstFunction random_cell_function(std::mt19937_64& rng,
                                       std::shared_ptr<const Complex> complex,
                                       unsigned max_denominator) {
    CellConstFunction g;
    for (std::size_t i = 0; i < complex->cells().size(); ++i) {
        long long p = static_cast<long long>(rng() % 7) - 3;  // -3..3
        long long d = 1 + static_cast<long long>(rng() % max_denominator);
        g.cell_values.push_back(q(p, d));
    }
    g.support_bound = compute_support_bound(*complex, g.cell_values);
    g.complex = std::move(complex);
    return g;
}

}  // namespace fixtures
}  // namespace ect
