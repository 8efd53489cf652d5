#include "doctest.h"

#include "ect/fixtures.hpp"
#include "ect/transforms.hpp"

#include <random>

using namespace ect;

namespace {
Rational q(long long p, long long d = 1) { return Rational(Integer(p), Integer(d)); }

Rational min_height(const Complex& k, const Direction& v) {
    Rational lo = dot(k.vertices().front(), v);
    for (const auto& p : k.vertices()) lo = std::min(lo, dot(p, v));
    return lo;
}
}  // namespace

TEST_CASE("disk shape transform is a single 0-to-1 step at the lowest vertex") {
    auto disk = fixtures::disk_mesh(64);
    for (const auto& v : sample_directions(8, 2, DirectionScheme::RationalGrid)) {
        StepCurve curve = ect_shape(*disk, v);
        REQUIRE(curve.breakpoints().size() == 1);
        CHECK(curve.breakpoints().front() == min_height(*disk, v));
        CHECK(curve.values() == std::vector<Rational>{q(0), q(1)});
    }
    // The axis direction hits the exactly-quantized vertex at (-1, 0).
    StepCurve axis = ect_shape(*disk, {q(1), q(0)});
    CHECK(axis.breakpoints().front() == q(-1));
    CHECK(axis.value_at(q(-1)) == 1);
    CHECK(axis.left_limit_at(q(-1)) == 0);
}

TEST_CASE("annulus shape transform sweeps through the hole") {
    auto annulus = fixtures::annulus_mesh();
    StepCurve curve = ect_shape(*annulus, {q(1), q(0)});
    CHECK(curve.breakpoints() == std::vector<Rational>{q(-2), q(1)});
    CHECK(curve.values() == std::vector<Rational>{q(0), q(1), q(0)});
}

TEST_CASE("constructible transform of an indicator matches the shape transform") {
    auto annulus = fixtures::annulus_mesh();
    CellConstFunction one = indicator(annulus);
    for (const auto& v : sample_directions(4, 2, DirectionScheme::RationalGrid))
        CHECK(ect_constructible(one, v) == ect_shape(*annulus, v));
    CHECK_THROWS_AS(ect_constructible(one.scaled(q(1, 2)), {q(1), q(0)}),
                    std::invalid_argument);
}

TEST_CASE("level and superlevel transforms of an indicator") {
    auto disk = fixtures::disk_mesh(16);
    CellConstFunction one = indicator(disk);
    Direction v{q(1), q(2)};
    StepCurve e = ect_shape(*disk, v);
    CHECK(lect(one, v, q(1)) == e);
    CHECK(select(one, v, q(1)) == e);
    CHECK(lect(one, v, q(2)).is_zero());
    CHECK(select(one, v, q(2)).is_zero());
    // s <= 0 superlevel sets include the zero set outside the support; at s
    // below every value the whole halfspace-clipped complex is counted.
    CHECK(select(one, v, q(1, 2)) == e);
}

TEST_CASE("superlevel slice in s is stored left continuously") {
    auto img = fixtures::two_pixel_image();  // values 1 and 3
    Direction v{q(1), q(0)};
    StepCurve slice = select_in_s(img.function, v, q(100));
    CHECK(slice.continuity() == Continuity::Left);
    // chi({g >= s}) for the full two-pixel strip: both pixels for s <= 1,
    // one closed pixel for s in (1, 3], empty above 3.
    CHECK(slice.value_at(q(1)) == 1);
    CHECK(slice.value_at(q(2)) == 1);
    CHECK(slice.value_at(q(3)) == 1);
    CHECK(slice.value_at(q(4)) == 0);
}

TEST_CASE("radon transform extends the constructible transform on integer values") {
    std::mt19937_64 rng(99);
    std::vector<CellConstFunction> gs;
    gs.push_back(fixtures::two_pixel_image().function);
    gs.push_back(fixtures::checkerboard_image(4).function);
    for (int i = 0; i < 5; ++i) {
        auto g = fixtures::random_cell_function(rng, fixtures::random_subcomplex(rng), 1);
        gs.push_back(std::move(g));
    }
    for (const auto& g : gs) {
        REQUIRE(g.integer_valued());
        int dim = static_cast<int>(g.complex->ambient_dim());
        for (const auto& v : sample_directions(dim, dim, DirectionScheme::Axes)) {
            StepCurve radon = ert(g, v);
            StepCurve direct = ect_constructible(g, v);
            CHECK(radon == direct);
        }
    }
}

TEST_CASE("floor-ceiling approximants agree at multiples of the denominator") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 5; ++trial) {
        auto k = fixtures::random_subcomplex(rng);
        auto g = fixtures::random_cell_function(rng, k, 6);
        unsigned lcm = 1;
        for (const auto& val : g.value_set())
            lcm = static_cast<unsigned>(boost::multiprecision::lcm(Integer(lcm), den(val))
                                            .convert_to<unsigned long long>());
        int dim = static_cast<int>(k->ambient_dim());
        for (const auto& v : sample_directions(dim, dim, DirectionScheme::Axes)) {
            for (long long tn = -4; tn <= 4; ++tn) {
                Rational t = q(tn, 2);
                Rational expected = ert_value(g, v, t);
                for (unsigned n : {lcm, 2 * lcm, 4 * lcm})
                    CHECK(euler_integral_fc(g, v, t, n) == expected);
            }
        }
    }
}

TEST_CASE("smoothing integrates the step curve against a centered window") {
    StepCurve step({q(0)}, {q(0), q(1)});
    PiecewiseLinearCurve smooth = sect(step, q(2));
    CHECK(smooth.domain_min() == q(-2));
    CHECK(smooth.domain_max() == q(2));
    CHECK(smooth.value_at(q(-2)) == 0);
    CHECK(smooth.value_at(q(0)) == q(-1));
    CHECK(smooth.value_at(q(2)) == 0);
    // bridge property: the curve vanishes at both window endpoints
    CHECK(smooth.value_at(q(1)) == q(1) - q(3, 2));

    CHECK_THROWS_WITH_AS(sect(step, q(0)), "window must be positive", std::invalid_argument);
    CHECK_THROWS_WITH_AS(sect(StepCurve({q(0)}, {q(1), q(0)}), q(2)),
                         "curve must vanish left of all breakpoints", std::invalid_argument);
    CHECK_THROWS_WITH_AS(sect(StepCurve({q(1)}, {q(0), q(1)}), q(1, 2)), "window too small",
                         std::invalid_argument);
}

TEST_CASE("default window strictly contains every breakpoint") {
    StepCurve step({q(-3), q(5)}, {q(0), q(2), q(0)});
    CHECK(default_window(step) == q(6));
    CHECK(default_window(StepCurve::zero()) == q(1));
}

TEST_CASE("inversion recovers the exact step curve") {
    StepCurve step({q(-1), q(1, 2), q(3)}, {q(0), q(2), q(-1), q(4)});
    Rational w = default_window(step);
    CHECK(invert_sect(sect(step, w)) == step);
    // a larger window changes the smooth curve but not the inversion
    CHECK(invert_sect(sect(step, w + 7)) == step);
}

TEST_CASE("randomized inversion round trips") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t n = 1 + rng() % 5;
        std::vector<Rational> bp;
        Rational x = q(static_cast<long long>(rng() % 9) - 4, 1 + rng() % 3);
        for (std::size_t i = 0; i < n; ++i) {
            bp.push_back(x);
            x += q(1 + static_cast<long long>(rng() % 5), 1 + rng() % 4);
        }
        std::vector<Rational> vals{q(0)};
        for (std::size_t i = 0; i < n; ++i) {
            Rational v;
            do {
                v = q(static_cast<long long>(rng() % 11) - 5);
            } while (v == vals.back());
            vals.push_back(v);
        }
        StepCurve step(bp, vals);
        Rational w = default_window(step);
        CHECK(invert_sect(sect(step, w)) == step);
        CHECK(invert_sert(sert(step, w)) == step);
    }
}

TEST_CASE("radon curves of fixture images") {
    auto img = fixtures::two_pixel_image();
    Direction v{q(1), q(0)};
    StepCurve e = ert(img.function, v);
    // grid rows are the first axis: pixel values 1 and 3 stacked along x
    CHECK(e.value_at(q(-1)) == 0);
    CHECK(e.value_at(q(0)) == 1);
    CHECK(e.value_at(q(1)) == 3);
    // closed strip total: the left pixel's half-open closure contributes 0
    CHECK(e.value_at(q(2)) == 3);
    CHECK(ert_value(img.function, v, q(1)) == e.value_at(q(1)));
}
