#include "doctest.h"

#include "ect/audits.hpp"
#include "ect/fixtures.hpp"

#include <random>

using namespace ect;

namespace {
Rational q(long long p, long long d = 1) { return Rational(Integer(p), Integer(d)); }
}  // namespace

TEST_CASE("right continuity audit on the disk curve") {
    auto disk = fixtures::disk_mesh(16);
    Direction v{q(1), q(0)};
    auto summaries = height_summaries(*disk, v);
    StepCurve curve = ect_shape(*disk, v);
    auto recompute = [&](const Rational& t) {
        return Rational(chi_preimage(summaries, IntervalQuery::leq(t)).value);
    };
    std::vector<Rational> probes{q(-2), q(-1), q(0), q(2)};
    AuditReport report = audit_right_continuity(curve, probes, recompute);
    CHECK(report.passed());
    CHECK(report.cases > 0);

    // the curve is genuinely one-sided: not left continuous at the jump
    CHECK(curve.left_limit_at(q(-1)) == 0);
    CHECK(curve.value_at(q(-1)) == 1);
}

TEST_CASE("right continuity audit catches a corrupted curve") {
    auto disk = fixtures::disk_mesh(16);
    Direction v{q(1), q(0)};
    auto summaries = height_summaries(*disk, v);
    StepCurve good = ect_shape(*disk, v);
    // value at the breakpoint replaced by the left value: canonicalization
    // flattens the curve, so the chi recomputation must disagree
    StepCurve bad(good.breakpoints(), {good.values()[0], good.values()[0]});
    auto recompute = [&](const Rational& t) {
        return Rational(chi_preimage(summaries, IntervalQuery::leq(t)).value);
    };
    AuditReport report = audit_right_continuity(bad, good.breakpoints(), recompute);
    CHECK_FALSE(report.passed());
    REQUIRE_FALSE(report.failures.empty());
    CHECK_FALSE(report.failures.front().input.empty());
    CHECK(report.failures.front().expected != report.failures.front().got);
}

TEST_CASE("vanishing threshold audit") {
    auto disk = fixtures::disk_mesh(16);
    AuditReport report = audit_vanishing_threshold(height_summaries(*disk, {q(1), q(0)}));
    CHECK(report.passed());
    CHECK(report.cases == 2);

    CHECK(audit_vanishing_threshold({}).passed());

    CellSummaries isolated{CellSummary{0, q(7), q(7), true}};
    CHECK(audit_vanishing_threshold(isolated).passed());
}

TEST_CASE("middle continuity audit") {
    auto disk = fixtures::disk_mesh(16);
    PLFunction height{disk, {}};
    for (const auto& p : disk->vertices()) height.vertex_values.push_back(p[0]);

    CHECK(audit_middle_continuity(*disk, height, q(0)).passed());       // interior level
    CHECK(audit_middle_continuity(*disk, height, q(-10)).passed());     // below all values
    CHECK(audit_middle_continuity(*disk, height, q(1, 3)).passed());    // non-critical level

    PLFunction constant{disk, std::vector<Rational>(disk->vertices().size(), q(5))};
    CHECK(audit_middle_continuity(*disk, constant, q(5)).passed());
}

TEST_CASE("select-lect identity audit") {
    auto disk = fixtures::disk_mesh(16);
    CellConstFunction one = indicator(disk);
    Direction v{q(1), q(0)};
    CHECK(audit_select_lect_identity(one, v, q(10), q(1)).passed());
    CHECK(audit_select_lect_identity(one, v, q(10), q(7)).passed());  // s above all values
    CHECK(audit_select_lect_identity(one, v, q(-10), q(1)).passed());

    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        auto k = fixtures::random_subcomplex(rng);
        auto g = fixtures::random_cell_function(rng, k);
        Direction dir(k->ambient_dim(), q(0));
        dir[trial % k->ambient_dim()] = 1;
        Rational t(static_cast<long long>(rng() % 9) - 4, 2);
        Rational s(static_cast<long long>(rng() % 11) - 5, 3);
        CAPTURE(trial);
        CHECK(audit_select_lect_identity(g, dir, t, s).passed());
    }
}

TEST_CASE("chi axioms audit") {
    std::mt19937_64 rng(7);
    AuditReport report = audit_chi_axioms(rng, 50);
    CHECK(report.passed());
    CHECK(report.cases == 54);  // 3 cylinders + point + 50 unions
}

TEST_CASE("noncompact counterexample audit") {
    AuditReport report = audit_noncompact_counterexample();
    CHECK(report.passed());
    CHECK_FALSE(report.notes.empty());
}

TEST_CASE("betti right continuity audit") {
    CHECK(audit_betti_right_continuity(*fixtures::annulus_mesh(), {q(1), q(0)}, 1).passed());
    CHECK(audit_betti_right_continuity(*fixtures::disk_mesh(16), {q(0), q(1)}, 0).passed());
    // degrees above the dimension are constant zero
    CHECK(audit_betti_right_continuity(*fixtures::ball3_mesh(), {q(1), q(1), q(0)}, 5).passed());
}

TEST_CASE("battery determinism") {
    auto first = run_audit_battery(11, 1);
    auto again = run_audit_battery(11, 1);
    auto parallel = run_audit_battery(11, 4);
    CHECK(first == again);
    CHECK(first == parallel);
    CHECK(reports_to_json(first) == reports_to_json(parallel));
    CHECK(reports_to_text(first) == reports_to_text(parallel));
    for (const auto& r : first) CHECK(r.passed());

    auto other_seed = run_audit_battery(12, 1);
    for (const auto& r : other_seed) CHECK(r.passed());
}

TEST_CASE("report serialization shapes") {
    AuditReport fail{"demo", 3, {AuditWitness{"in", "1", "2"}}, {"note"}};
    std::string text = reports_to_text({fail});
    CHECK(text.find("FAIL") != std::string::npos);
    CHECK(text.find("witness") != std::string::npos);
    std::string json = reports_to_json({fail});
    CHECK(json.find("\"passed\": false") != std::string::npos);
    CHECK(json.find("\"expected\": \"1\"") != std::string::npos);
}
