#include "doctest.h"

#include "ect/clip_oracle.hpp"
#include "ect/fixtures.hpp"
#include "ect/homology.hpp"

using namespace ect;

namespace {
Rational q(long long p, long long d = 1) { return Rational(Integer(p), Integer(d)); }
}  // namespace

TEST_CASE("bit matrix rank") {
    BitMatrix id(3, 3);
    for (std::size_t i = 0; i < 3; ++i) id.set(i, i);
    CHECK(id.rank() == 3);

    BitMatrix dep(3, 3);
    dep.set(0, 0);
    dep.set(0, 1);
    dep.set(1, 1);
    dep.set(1, 2);
    dep.set(2, 0);  // row2 = row0 + row1 over GF(2)
    dep.set(2, 2);
    CHECK(dep.rank() == 2);

    CHECK(BitMatrix(0, 5).rank() == 0);

    // wide matrix crossing the 64-bit word boundary
    BitMatrix wide(2, 130);
    wide.set(0, 0);
    wide.set(0, 129);
    wide.set(1, 129);
    CHECK(wide.rank() == 2);
}

TEST_CASE("boundary matrices of a triangle") {
    auto tri = SimplicialComplex::build({{q(0), q(0)}, {q(1), q(0)}, {q(0), q(1)}}, {{0, 1, 2}});
    BitMatrix d1 = boundary_matrix(tri, 1);
    CHECK(d1.rows() == 3);
    CHECK(d1.cols() == 3);
    CHECK(d1.rank() == 2);
    BitMatrix d2 = boundary_matrix(tri, 2);
    CHECK(d2.rank() == 1);
    CHECK_THROWS_AS(boundary_matrix(tri, 0), std::invalid_argument);
}

TEST_CASE("betti numbers of standard complexes") {
    auto point = SimplicialComplex::build({{q(0)}}, {{0}});
    CHECK(betti_numbers(point) == BettiVector{1});

    auto two_points = SimplicialComplex::build({{q(0)}, {q(1)}}, {{0}, {1}});
    CHECK(betti_numbers(two_points) == BettiVector{2});

    // hollow triangle = circle
    auto circle = SimplicialComplex::build({{q(0), q(0)}, {q(1), q(0)}, {q(0), q(1)}},
                                           {{0, 1}, {1, 2}, {0, 2}});
    CHECK(betti_numbers(circle) == BettiVector{1, 1});

    // hollow tetrahedron = sphere
    auto sphere = SimplicialComplex::build(
        {{q(0), q(0), q(0)}, {q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(1)}},
        {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(betti_numbers(sphere) == BettiVector{1, 0, 1});

    CHECK(betti_numbers(*fixtures::disk_mesh(16)) == BettiVector{1, 0, 0});
    CHECK(betti_numbers(*fixtures::annulus_mesh()) == BettiVector{1, 1, 0});
    CHECK(betti_numbers(*fixtures::torus_mesh()) == BettiVector{1, 2, 1});
    CHECK(betti_numbers(*fixtures::ball3_mesh()) == BettiVector{1, 0, 0, 0});
}

TEST_CASE("sublevel subcomplexes along a direction") {
    auto annulus = fixtures::annulus_mesh();
    Direction v{q(1), q(0)};
    auto heights = vertex_heights(*annulus, v);

    auto below = sublevel_subcomplex(*annulus, heights, q(-3));
    CHECK(below.empty());
    CHECK(betti_numbers(below).empty());

    auto wall = sublevel_subcomplex(*annulus, heights, q(-2));
    CHECK(betti_numbers(wall) == BettiVector{1, 0});

    auto everything = sublevel_subcomplex(*annulus, heights, q(2));
    CHECK(betti_numbers(everything) == BettiVector{1, 1, 0});

    CHECK_THROWS_AS(sublevel_subcomplex(*annulus, {q(0)}, q(0)), std::invalid_argument);
}

TEST_CASE("betti curves of the annulus") {
    auto annulus = fixtures::annulus_mesh();
    Direction v{q(1), q(0)};

    StepCurve b0 = betti_curve(*annulus, v, 0);
    CHECK(b0.breakpoints() == std::vector<Rational>{q(-2)});
    CHECK(b0.values() == std::vector<Rational>{q(0), q(1)});

    StepCurve b1 = betti_curve(*annulus, v, 1);
    CHECK(b1.breakpoints() == std::vector<Rational>{q(1)});
    CHECK(b1.values() == std::vector<Rational>{q(0), q(1)});

    // degrees above the dimension are identically zero
    CHECK(betti_curve(*annulus, v, 3).is_zero());
    CHECK_THROWS_AS(betti_curve(*annulus, v, -1), std::invalid_argument);
}

TEST_CASE("euler-poincare matches the clipping oracle on sublevel complexes") {
    for (auto mesh : {fixtures::disk_mesh(16), fixtures::annulus_mesh(), fixtures::ball3_mesh()}) {
        int dim = static_cast<int>(mesh->ambient_dim());
        for (const auto& v : sample_directions(dim, dim, DirectionScheme::Axes)) {
            auto heights = vertex_heights(*mesh, v);
            auto sorted = heights;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            for (const auto& t : sorted) {
                auto bettis = betti_numbers(sublevel_subcomplex(*mesh, heights, t));
                long long chi = 0;
                for (std::size_t i = 0; i < bettis.size(); ++i)
                    chi += (i % 2 == 0) ? static_cast<long long>(bettis[i])
                                        : -static_cast<long long>(bettis[i]);
                CHECK(chi == chi_clipped_oracle(*mesh, v, t));
            }
        }
    }
}

TEST_CASE("kuhn triangulation of cubical complexes") {
    CubicalComplex cube({q(0), q(0), q(0)}, {q(1), q(1), q(1)}, {1, 1, 1});
    SimplicialComplex tris = triangulate(cube);
    std::size_t tets = 0;
    for (const auto& c : tris.cells())
        if (c.dim == 3) ++tets;
    CHECK(tets == 6);
    CHECK(betti_numbers(tris) == BettiVector{1, 0, 0, 0});
    long long chi = 0;
    for (const auto& c : tris.cells()) chi += (c.dim % 2 == 0) ? 1 : -1;
    CHECK(chi == 1);

    // shared faces triangulate consistently, so a 2x1 strip stays contractible
    CubicalComplex strip({q(0), q(0)}, {q(1), q(1)}, {2, 1});
    SimplicialComplex strip_tris = triangulate(strip);
    CHECK(betti_numbers(strip_tris) == BettiVector{1, 0, 0});
}
