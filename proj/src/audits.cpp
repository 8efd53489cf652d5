#include "ect/audits.hpp"

#include "ect/clip_oracle.hpp"
#include "ect/euler.hpp"
#include "ect/fixtures.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace ect {

void AuditReport::check(bool ok, const std::string& input, const std::string& expected,
                        const std::string& got) {
    ++cases;
    if (!ok) failures.push_back(AuditWitness{input, expected, got});
}

namespace {

std::vector<Rational> sorted_unique(std::vector<Rational> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

// Half the minimal gap between adjacent entries of a sorted list; 1/2 when
// fewer than two entries exist. Every limit statement in the audits is
// attained at this finite delta because the audited functions are step
// functions of it.
Rational half_min_gap(const std::vector<Rational>& sorted) {
    Rational gap = 1;
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        Rational g = sorted[i + 1] - sorted[i];
        if (g < gap) gap = g;
    }
    return gap / 2;
}

std::string fmt(const Rational& q) { return to_string(q); }

std::size_t beta(const BettiVector& b, int k) {
    if (k < 0 || static_cast<std::size_t>(k) >= b.size()) return 0;
    return b[static_cast<std::size_t>(k)];
}

long long euler_poincare(const BettiVector& b) {
    long long chi = 0;
    for (std::size_t i = 0; i < b.size(); ++i)
        chi += (i % 2 == 0) ? static_cast<long long>(b[i]) : -static_cast<long long>(b[i]);
    return chi;
}

}  // namespace

AuditReport audit_right_continuity(const StepCurve& curve, std::vector<Rational> probes,
                                   const std::function<Rational(const Rational&)>& recompute) {
    AuditReport report{"right-continuity"};
    for (const auto& b : curve.breakpoints()) probes.push_back(b);
    probes = sorted_unique(std::move(probes));

    for (const auto& b : curve.breakpoints()) {
        auto it = std::upper_bound(probes.begin(), probes.end(), b);
        Rational delta = (it == probes.end()) ? Rational(1, 2) : (*it - b) / 2;
        Rational right = b + delta;
        report.check(curve.value_at(b) == curve.value_at(right),
                     "breakpoint " + fmt(b) + ", delta " + fmt(delta), fmt(curve.value_at(right)),
                     fmt(curve.value_at(b)));
        if (recompute)
            report.check(recompute(right) == curve.value_at(right), "recompute at " + fmt(right),
                         fmt(curve.value_at(right)), fmt(recompute(right)));
    }
    if (recompute)
        for (const auto& p : probes)
            report.check(recompute(p) == curve.value_at(p), "recompute at " + fmt(p),
                         fmt(curve.value_at(p)), fmt(recompute(p)));
    if (curve.breakpoints().empty() && !recompute) report.check(true, "constant curve", "", "");
    return report;
}

AuditReport audit_vanishing_threshold(const CellSummaries& summaries) {
    AuditReport report{"vanishing-threshold"};
    if (summaries.empty()) {
        report.check(true, "empty complex", "0", "0");
        return report;
    }
    Rational lowest = summaries.front().lo;
    for (const auto& s : summaries) lowest = std::min(lowest, s.lo);
    Rational c = lowest - 1;
    for (const Rational& t : {c, Rational(c - 1)}) {
        long long chi = chi_preimage(summaries, IntervalQuery::leq(t)).value;
        report.check(chi == 0, "threshold " + fmt(t), "0", std::to_string(chi));
    }
    return report;
}

AuditReport audit_middle_continuity(const SimplicialComplex& complex, const PLFunction& f,
                                    const Rational& t) {
    AuditReport report{"middle-continuity"};
    auto summaries = pl_summaries(complex, f);
    std::vector<Rational> thresholds;
    for (const auto& s : summaries) {
        thresholds.push_back(s.lo);
        thresholds.push_back(s.hi);
    }
    // delta keeps [t - delta, t + delta] clear of every threshold other
    // than t itself.
    Rational delta = 1;
    for (const auto& th : sorted_unique(std::move(thresholds))) {
        if (th == t) continue;
        Rational d = rational_abs(th - t) / 2;
        if (d < delta) delta = d;
    }
    long long band = chi_preimage(summaries, IntervalQuery::band(t - delta, t + delta)).value;
    long long level = chi_preimage(summaries, IntervalQuery::eq(t)).value;
    report.check(band == level, "t " + fmt(t) + ", delta " + fmt(delta), std::to_string(level),
                 std::to_string(band));
    return report;
}

AuditReport audit_select_lect_identity(const CellConstFunction& g, const Direction& v,
                                       const Rational& t, const Rational& s) {
    AuditReport report{"select-lect-identity"};
    std::vector<Rational> values = g.value_set();
    values.push_back(s);
    Rational delta = half_min_gap(sorted_unique(std::move(values)));

    Rational lhs = select(g, v, s - delta).value_at(t) +
                   select(g.negated(), v, -s - delta).value_at(t);
    long long shape_chi = chi_preimage(height_summaries(*g.complex, v), IntervalQuery::leq(t)).value;
    Rational rhs = lect(g, v, s).value_at(t) + shape_chi;
    report.check(lhs == rhs, "t " + fmt(t) + ", s " + fmt(s) + ", delta " + fmt(delta), fmt(rhs),
                 fmt(lhs));
    return report;
}

AuditReport audit_chi_axioms(std::mt19937_64& rng, int union_cases) {
    AuditReport report{"chi-axioms"};

    // Open-cell models of (0,1] x (0,1)^n: an open (n+1)-cell with image
    // (0,1) under the first coordinate, plus an open n-cell constant at 1.
    for (int n = 0; n <= 2; ++n) {
        CellSummaries model{CellSummary{n + 1, 0, 1, false}, CellSummary{n, 1, 1, true}};
        long long chi = chi_preimage(model, IntervalQuery::leq(Rational(10))).value;
        report.check(chi == 0, "half-open cylinder, n = " + std::to_string(n), "0",
                     std::to_string(chi));
    }

    CellSummaries point{CellSummary{0, 0, 0, true}};
    long long chi_point = chi_preimage(point, IntervalQuery::leq(Rational(1))).value;
    report.check(chi_point == 1, "single point", "1", std::to_string(chi_point));

    // Additivity over disjoint unions: translate the second complex far
    // along the first axis and rebuild the union as one complex.
    for (int trial = 0; trial < union_cases; ++trial) {
        auto a = fixtures::random_subcomplex(rng);
        auto b = fixtures::random_subcomplex(rng);
        std::vector<Point> vertices;
        std::vector<std::vector<std::size_t>> simplices;
        for (auto [k, shift] : {std::pair{a, Rational(0)}, std::pair{b, Rational(100)}}) {
            std::size_t base = vertices.size();
            for (const auto& p : k->vertices()) {
                Point padded = p;
                padded.resize(3, Rational(0));
                padded[0] += shift;
                vertices.push_back(std::move(padded));
            }
            for (const auto& c : k->cells()) {
                std::vector<std::size_t> ids;
                for (auto vid : c.vertices) ids.push_back(base + vid);
                simplices.push_back(std::move(ids));
            }
        }
        auto merged = SimplicialComplex::build(std::move(vertices), simplices);
        Direction e1{Rational(1), Rational(0), Rational(0)};
        auto chi_of = [&](const Complex& k, const Direction& v) {
            return chi_total(height_summaries(k, v));
        };
        Direction e1a(a->ambient_dim(), Rational(0)), e1b(b->ambient_dim(), Rational(0));
        e1a[0] = 1;
        e1b[0] = 1;
        long long lhs = chi_of(merged, e1);
        long long rhs = chi_of(*a, e1a) + chi_of(*b, e1b);
        report.check(lhs == rhs, "disjoint union trial " + std::to_string(trial),
                     std::to_string(rhs), std::to_string(lhs));
    }
    return report;
}

AuditReport audit_noncompact_counterexample() {
    AuditReport report{"noncompact-counterexample"};
    report.notes.push_back(
        "The half-line (0, infinity) has sublevel sets (0, delta] whose failure to "
        "deformation retract onto the empty set at 0 is a homotopy-level fact; only the "
        "chi bookkeeping is computed here.");

    for (const Rational& delta : {Rational(1), Rational(1, 2)}) {
        // Cell model of (0, delta]: open edge with image (0, delta) plus the
        // endpoint vertex at delta.
        CellSummaries model{CellSummary{1, 0, delta, false}, CellSummary{0, delta, delta, true}};
        long long chi_at_zero = chi_preimage(model, IntervalQuery::leq(Rational(0))).value;
        long long chi_at_delta = chi_preimage(model, IntervalQuery::leq(delta)).value;
        report.check(chi_at_zero == 0, "chi of empty sublevel, delta " + fmt(delta), "0",
                     std::to_string(chi_at_zero));
        report.check(chi_at_delta == 0, "chi of (0, delta], delta " + fmt(delta), "0",
                     std::to_string(chi_at_delta));
        report.notes.push_back("delta " + fmt(delta) + ": chi values (0, 0) recorded");
    }

    // Compact control: on [0, 1] the sublevel sets do retract, and the
    // Betti curve is constant 1 from the left endpoint on.
    auto segment = SimplicialComplex::build({{Rational(0)}, {Rational(1)}}, {{0, 1}});
    StepCurve b0 = betti_curve(segment, {Rational(1)}, 0);
    report.check(b0.value_at(Rational(0)) == 1 && b0.value_at(Rational(1, 2)) == 1 &&
                     b0.value_at(Rational(2)) == 1,
                 "compact control segment beta_0", "1 at 0, 1/2, 2",
                 fmt(b0.value_at(Rational(0))) + ", " + fmt(b0.value_at(Rational(1, 2))) + ", " +
                     fmt(b0.value_at(Rational(2))));
    return report;
}

AuditReport audit_betti_right_continuity(const SimplicialComplex& complex, const Direction& v,
                                         int k) {
    AuditReport report{"betti-right-continuity"};
    auto heights = sorted_unique(vertex_heights(complex, v));
    auto values = [&](const Rational& t) {
        return betti_numbers(sublevel_subcomplex(complex, vertex_heights(complex, v), t));
    };
    for (std::size_t i = 0; i < heights.size(); ++i) {
        const Rational& b = heights[i];
        Rational mid = (i + 1 < heights.size()) ? Rational((b + heights[i + 1]) / 2)
                                                : Rational(b + 1);
        auto at_b = values(b);
        auto at_mid = values(mid);
        report.check(beta(at_b, k) == beta(at_mid, k),
                     "k " + std::to_string(k) + ", breakpoint " + fmt(b),
                     std::to_string(beta(at_mid, k)), std::to_string(beta(at_b, k)));
        long long oracle = chi_clipped_oracle(complex, v, b);
        report.check(euler_poincare(at_b) == oracle,
                     "Euler-Poincare cross-check at " + fmt(b), std::to_string(oracle),
                     std::to_string(euler_poincare(at_b)));
    }
    return report;
}

namespace {

struct Job {
    std::string label;
    std::function<AuditReport()> run;
};

std::vector<Rational> curve_probes(const StepCurve& curve) {
    std::vector<Rational> probes = curve.breakpoints();
    if (!probes.empty()) {
        probes.push_back(probes.front() - 1);
        probes.push_back(probes.back() + 1);
    }
    return probes;
}

AuditReport merge(std::string tag, std::vector<AuditReport> parts) {
    AuditReport out{std::move(tag)};
    for (auto& p : parts) {
        out.cases += p.cases;
        for (auto& w : p.failures) out.failures.push_back(std::move(w));
        for (auto& n : p.notes) out.notes.push_back(std::move(n));
    }
    return out;
}

std::vector<Job> battery_jobs(std::uint64_t seed) {
    std::vector<Job> jobs;

    struct NamedMesh {
        std::string name;
        std::shared_ptr<SimplicialComplex> mesh;
    };
    std::vector<NamedMesh> meshes{{"disk", fixtures::disk_mesh(64)},
                                  {"annulus", fixtures::annulus_mesh()},
                                  {"torus", fixtures::torus_mesh()},
                                  {"ball3", fixtures::ball3_mesh()}};

    // Shape transforms: right continuity (with chi recomputation) and the
    // vanishing threshold, per mesh and direction.
    jobs.push_back({"ect right continuity + vanishing", [meshes] {
        std::vector<AuditReport> parts;
        for (const auto& [name, mesh] : meshes) {
            int dim = static_cast<int>(mesh->ambient_dim());
            for (const auto& v : sample_directions(2 * dim, dim, DirectionScheme::RationalGrid)) {
                auto summaries = height_summaries(*mesh, v);
                StepCurve curve = ect_shape(*mesh, v);
                auto recompute = [&summaries](const Rational& t) {
                    return Rational(chi_preimage(summaries, IntervalQuery::leq(t)).value);
                };
                parts.push_back(audit_right_continuity(curve, curve_probes(curve), recompute));
                parts.push_back(audit_vanishing_threshold(summaries));
            }
        }
        return merge("shape curves: right continuity + vanishing", std::move(parts));
    }});

    // Negative control: corrupting a breakpoint value to its left limit
    // must be caught.
    jobs.push_back({"right continuity negative control", [meshes] {
        AuditReport report{"right-continuity negative control"};
        Direction v{Rational(1), Rational(0)};
        StepCurve good = ect_shape(*meshes[0].mesh, v);
        std::vector<Rational> values = good.values();
        values[1] = good.values().front();  // overwrite the first right value
        StepCurve bad(good.breakpoints(), values);
        auto summaries = height_summaries(*meshes[0].mesh, v);
        auto recompute = [&summaries](const Rational& t) {
            return Rational(chi_preimage(summaries, IntervalQuery::leq(t)).value);
        };
        bool caught = !audit_right_continuity(bad, curve_probes(good), recompute).passed();
        report.check(caught, "corrupted disk curve", "audit failure",
                     caught ? "audit failure" : "audit passed");
        // The genuine curve is not left continuous at its breakpoint.
        report.check(good.left_limit_at(good.breakpoints().front()) !=
                         good.value_at(good.breakpoints().front()),
                     "left discontinuity at first breakpoint", "left limit != value",
                     "left limit == value");
        return report;
    }});

    // Middle continuity for the PL function battery on three meshes.
    jobs.push_back({"middle continuity", [meshes] {
        std::vector<AuditReport> parts;
        for (std::size_t mi : {0u, 1u, 3u}) {  // disk, annulus, ball3
            auto mesh = meshes[mi].mesh;
            for (const auto& f : fixtures::fixture_pl_functions(mesh)) {
                std::vector<Rational> thresholds;
                for (const auto& s : pl_summaries(*mesh, f)) {
                    thresholds.push_back(s.lo);
                    thresholds.push_back(s.hi);
                }
                thresholds = sorted_unique(std::move(thresholds));
                std::vector<Rational> probes = thresholds;
                for (std::size_t i = 0; i + 1 < thresholds.size(); ++i)
                    probes.push_back((thresholds[i] + thresholds[i + 1]) / 2);
                for (const auto& t : probes)
                    parts.push_back(audit_middle_continuity(*mesh, f, t));
            }
        }
        return merge("middle continuity", std::move(parts));
    }});

    // LECT/SELECT/ECT identity on randomized constructible functions.
    jobs.push_back({"select-lect identity", [meshes, seed] {
        std::mt19937_64 rng(seed ^ 0x5e1ec7ull);
        std::vector<AuditReport> parts;
        std::vector<CellConstFunction> gs;
        gs.push_back(fixtures::two_pixel_image().function);
        gs.push_back(fixtures::checkerboard_image().function);
        for (int i = 0; i < 10; ++i) {
            auto k = fixtures::random_subcomplex(rng);
            gs.push_back(fixtures::random_cell_function(rng, k));
        }
        for (const auto& g : gs) {
            int dim = static_cast<int>(g.complex->ambient_dim());
            auto dirs = sample_directions(dim, dim, DirectionScheme::RationalGrid);
            for (const auto& v : dirs) {
                for (int i = 0; i < 4; ++i) {
                    Rational t(static_cast<long long>(rng() % 17) - 8, 2);
                    Rational s(static_cast<long long>(rng() % 13) - 6, 3);
                    parts.push_back(audit_select_lect_identity(g, v, t, s));
                }
            }
        }
        return merge("select-lect identity", std::move(parts));
    }});

    // LECT / SELECT(t) / ERT curves of the fixture functions are right
    // continuous in t.
    jobs.push_back({"constructible curves right continuity", [seed] {
        std::mt19937_64 rng(seed ^ 0xe47ull);
        std::vector<AuditReport> parts;
        std::vector<CellConstFunction> gs;
        gs.push_back(fixtures::two_pixel_image().function);
        gs.push_back(fixtures::checkerboard_image().function);
        for (int i = 0; i < 4; ++i)
            gs.push_back(fixtures::random_cell_function(rng, fixtures::random_subcomplex(rng)));
        for (const auto& g : gs) {
            int dim = static_cast<int>(g.complex->ambient_dim());
            for (const auto& v : sample_directions(dim, dim, DirectionScheme::Axes)) {
                StepCurve e = ert(g, v);
                auto recompute = [&g, &v](const Rational& t) { return ert_value(g, v, t); };
                parts.push_back(audit_right_continuity(e, curve_probes(e), recompute));
                for (const auto& s : g.value_set()) {
                    StepCurve l = lect(g, v, s);
                    parts.push_back(audit_right_continuity(l, curve_probes(l)));
                    StepCurve sl = select(g, v, s);
                    parts.push_back(audit_right_continuity(sl, curve_probes(sl)));
                }
            }
        }
        return merge("constructible curves right continuity", std::move(parts));
    }});

    jobs.push_back({"chi axioms", [seed] {
        std::mt19937_64 rng(seed ^ 0xa10a5ull);
        return audit_chi_axioms(rng, 50);
    }});

    jobs.push_back({"noncompact counterexample", [] { return audit_noncompact_counterexample(); }});

    jobs.push_back({"betti right continuity", [meshes] {
        std::vector<AuditReport> parts;
        for (const auto& [name, mesh] : meshes) {
            int dim = static_cast<int>(mesh->ambient_dim());
            for (const auto& v : sample_directions(dim, dim, DirectionScheme::Axes))
                for (int k = 0; k <= 2; ++k)
                    parts.push_back(audit_betti_right_continuity(*mesh, v, k));
        }
        return merge("betti right continuity", std::move(parts));
    }});

    return jobs;
}

}  // namespace

std::vector<AuditReport> run_audit_battery(std::uint64_t seed, int workers) {
    auto jobs = battery_jobs(seed);
    std::vector<AuditReport> results(jobs.size());
    if (workers < 1) workers = 1;
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1))
            results[i] = jobs[i].run();
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return results;
}

std::string reports_to_text(const std::vector<AuditReport>& reports) {
    std::ostringstream out;
    for (const auto& r : reports) {
        out << (r.passed() ? "PASS" : "FAIL") << "  " << r.tag << "  (" << r.cases << " cases, "
            << r.failures.size() << " failures)\n";
        for (const auto& w : r.failures)
            out << "      witness: " << w.input << "  expected " << w.expected << ", got " << w.got
                << "\n";
        for (const auto& n : r.notes) out << "      note: " << n << "\n";
    }
    return out.str();
}

std::string reports_to_json(const std::vector<AuditReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json failures = nlohmann::json::array();
        for (const auto& w : r.failures)
            failures.push_back({{"input", w.input}, {"expected", w.expected}, {"got", w.got}});
        arr.push_back({{"tag", r.tag},
                       {"cases", r.cases},
                       {"passed", r.passed()},
                       {"failures", failures},
                       {"notes", r.notes}});
    }
    return arr.dump(2) + "\n";
}

}  // namespace ect
