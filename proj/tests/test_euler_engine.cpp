#include "doctest.h"

#include "ect/clip_oracle.hpp"
#include "ect/euler.hpp"
#include "ect/fixtures.hpp"

#include <random>

using namespace ect;

namespace {
Rational q(long long p, long long d = 1) { return Rational(Integer(p), Integer(d)); }

CellSummary summary(int dim, Rational lo, Rational hi) {
    return CellSummary{dim, lo, hi, lo == hi};
}
}  // namespace

TEST_CASE("per-cell chi contributions") {
    // open edge cut transversally: open part and boundary face cancel
    CHECK(cell_chi_contribution(summary(1, q(0), q(1)), IntervalQuery::leq(q(1, 2))) == 0);
    // vertex on the hyperplane
    CHECK(cell_chi_contribution(summary(0, q(0), q(0)), IntervalQuery::leq(q(0))) == 1);
    // edge inside the hyperplane
    CHECK(cell_chi_contribution(summary(1, q(7), q(7)), IntervalQuery::leq(q(7))) == -1);
}

TEST_CASE("band inside an open triangle") {
    // The band {1/4 <= f <= 1/2} of an open 2-cell with image (0, 1) is
    // homeomorphic to [0,1] x (0,1); brute-force oracle: chi of the product
    // of the cell models (2 vertices + 1 edge) x (1 open edge).
    ChiReport closed_interval{1, 3};  // 1 - 2 = ... chi([0,1]) = 2 - 1 = 1
    ChiReport open_interval{-1, 1};
    long long expected = chi_product(closed_interval, open_interval);
    CHECK(expected == -1);
    CHECK(cell_chi_contribution(summary(2, q(0), q(1)),
                                IntervalQuery::band(q(1, 4), q(1, 2))) == expected);
}

TEST_CASE("chi of sublevel sets on fixture meshes") {
    auto disk = fixtures::disk_mesh(32);
    Direction v{q(2), q(1)};
    auto s = height_summaries(*disk, v);
    CHECK(chi_preimage(s, IntervalQuery::leq(q(100))).value == 1);
    CHECK(chi_preimage(s, IntervalQuery::leq(q(-100))).value == 0);

    // annulus sweep cross-checked against the clipping oracle
    auto annulus = fixtures::annulus_mesh();
    Direction ex{q(1), q(0)};
    auto sa = height_summaries(*annulus, ex);
    for (long long t2 : {-6, -3, 0, 1, 3, 6}) {
        Rational t = q(t2, 2);
        CHECK(chi_preimage(sa, IntervalQuery::leq(t)).value == chi_clipped_oracle(*annulus, ex, t));
    }
    CHECK(chi_preimage(sa, IntervalQuery::leq(q(0))).value == 1);   // before the hole closes
    CHECK(chi_preimage(sa, IntervalQuery::leq(q(3, 2))).value == 0);  // loop closed
}

TEST_CASE("euler integral of constructible functions") {
    auto seg = std::make_shared<SimplicialComplex>(
        SimplicialComplex::build({{q(0)}, {q(1)}}, {{0, 1}}));

    CellConstFunction two_on_segment = indicator(seg).scaled(q(2));
    CHECK(euler_integral(two_on_segment) == 2);

    // 1 on the open edge only
    CellConstFunction open_edge = indicator(seg);
    open_edge.cell_values[0] = 0;
    open_edge.cell_values[1] = 0;
    CHECK(euler_integral(open_edge) == -1);

    // closed segment at 2 plus an isolated vertex at 1
    auto seg_plus_vertex = std::make_shared<SimplicialComplex>(
        SimplicialComplex::build({{q(0)}, {q(1)}, {q(5)}}, {{0, 1}, {2}}));
    CellConstFunction g = indicator(seg_plus_vertex).scaled(q(2));
    for (std::size_t i = 0; i < seg_plus_vertex->cells().size(); ++i)
        if (seg_plus_vertex->cells()[i].vertices == std::vector<std::size_t>{2})
            g.cell_values[i] = 1;
    CHECK(euler_integral(g) == 3);

    CellConstFunction half = indicator(seg).scaled(q(1, 2));
    CHECK_THROWS_AS(euler_integral(half), std::invalid_argument);
}

TEST_CASE("clipping oracle basics") {
    auto seg = SimplicialComplex::build({{q(0), q(0)}, {q(1), q(0)}}, {{0, 1}});
    Direction ex{q(1), q(0)};
    CHECK(chi_clipped_oracle(seg, ex, q(1, 2)) == 1);

    auto tri = SimplicialComplex::build({{q(0), q(0)}, {q(1), q(0)}, {q(0), q(1)}}, {{0, 1, 2}});
    CHECK(chi_clipped_oracle(tri, ex, q(-1)) == 0);
    Direction gen{q(3), q(1)};  // generic: unique lowest vertex
    CHECK(chi_clipped_oracle(tri, gen, q(0)) == 1);  // clip is the single point (0,0)

    auto ball = fixtures::ball3_mesh();
    Direction e3{q(0), q(0), q(1)};
    CHECK(chi_clipped_oracle(*ball, e3, q(1, 2)) == 1);
    CHECK(chi_clipped_oracle(*ball, e3, q(2)) == 1);

    auto hyper = SimplicialComplex::build(
        {{q(0), q(0), q(0), q(0)},
         {q(1), q(0), q(0), q(0)},
         {q(0), q(1), q(0), q(0)},
         {q(0), q(0), q(1), q(0)},
         {q(0), q(0), q(0), q(1)}},
        {{0, 1, 2, 3, 4}});
    CHECK_THROWS_WITH_AS(chi_clipped_oracle(hyper, {q(1), q(0), q(0), q(0)}, q(1)),
                         "oracle restricted to <= 3", std::invalid_argument);
}

TEST_CASE("oracle equivalence on random complexes") {
    std::mt19937_64 rng(20240901);
    for (int trial = 0; trial < 25; ++trial) {
        auto k = fixtures::random_subcomplex(rng);
        Direction v;
        do {
            v.clear();
            for (std::size_t i = 0; i < k->ambient_dim(); ++i)
                v.push_back(q(static_cast<long long>(rng() % 7) - 3));
        } while (is_zero_vector(v));
        auto s = height_summaries(*k, v);

        std::vector<Rational> probes;
        for (const auto& cs : s) {
            probes.push_back(cs.lo);
            probes.push_back(cs.hi);
        }
        std::sort(probes.begin(), probes.end());
        probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
        std::vector<Rational> ts;
        ts.push_back(probes.front() - 1);
        ts.push_back(probes.back() + 1);
        for (std::size_t i = 0; i < probes.size(); ++i) {
            ts.push_back(probes[i]);
            if (i + 1 < probes.size()) ts.push_back((probes[i] + probes[i + 1]) / 2);
        }
        for (const auto& t : ts) {
            CAPTURE(trial);
            CHECK(chi_preimage(s, IntervalQuery::leq(t)).value == chi_clipped_oracle(*k, v, t));
        }
    }
}

TEST_CASE("additivity and band consistency") {
    std::mt19937_64 rng(7);
    auto k = fixtures::random_subcomplex(rng);
    Direction v{q(1), q(-2), q(1)};
    if (k->ambient_dim() == 2) v = {q(1), q(-2)};
    auto s = height_summaries(*k, v);
    const long long total = chi_total(s);
    for (long long num = -8; num <= 8; ++num) {
        Rational t = q(num, 3);
        CHECK(chi_preimage(s, IntervalQuery::eq(t)).value +
                  chi_preimage(s, IntervalQuery::lt(t)).value +
                  chi_preimage(s, IntervalQuery::gt(t)).value ==
              total);
        Rational t2 = t + q(1, 2);
        CHECK(chi_preimage(s, IntervalQuery::band(t, t2)).value ==
              chi_preimage(s, IntervalQuery::leq(t2)).value -
                  chi_preimage(s, IntervalQuery::lt(t)).value);
    }
}

TEST_CASE("chi of half-open cylinders vanishes") {
    // open-cell models of (0,1] x (0,1)^n
    // n=0: open edge + vertex; n=1: open square + open edge; n=2: open cube + open square
    for (int n = 0; n <= 2; ++n) {
        long long chi = 0;
        chi += ((n + 1) % 2 == 0) ? 1 : -1;  // (0,1) x (0,1)^n, dim n+1
        chi += (n % 2 == 0) ? 1 : -1;        // {1} x (0,1)^n, dim n
        CHECK(chi == 0);
    }
    CHECK(chi_disjoint_union(ChiReport{1, 1}, ChiReport{1, 1}) == 2);
    CHECK(chi_product(ChiReport{1, 1}, ChiReport{1, 1}) == 1);
    CHECK(chi_product(ChiReport{0, 2}, ChiReport{42, 9}) == 0);
    CHECK(chi_product(ChiReport{-1, 1}, ChiReport{-1, 1}) == 1);
}

TEST_CASE("sublevel chi only changes at cell thresholds and is right continuous") {
    auto annulus = fixtures::annulus_mesh();
    Direction v{q(1), q(1)};
    auto s = height_summaries(*annulus, v);
    std::vector<Rational> thresholds;
    for (const auto& cs : s) {
        thresholds.push_back(cs.lo);
        thresholds.push_back(cs.hi);
    }
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
    for (std::size_t i = 0; i + 1 < thresholds.size(); ++i) {
        Rational b = thresholds[i];
        Rational mid = (thresholds[i] + thresholds[i + 1]) / 2;
        // value at the threshold equals the value just to the right
        CHECK(chi_preimage(s, IntervalQuery::leq(b)).value ==
              chi_preimage(s, IntervalQuery::leq(mid)).value);
    }
}
