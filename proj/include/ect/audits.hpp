#pragma once

#include "ect/homology.hpp"
#include "ect/transforms.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace ect {

// One failed check, with enough context to replay it by hand.
struct AuditWitness {
    std::string input;
    std::string expected;
    std::string got;

    bool operator==(const AuditWitness&) const = default;
};

struct AuditReport {
    std::string tag;
    std::size_t cases = 0;
    std::vector<AuditWitness> failures;
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }
    void check(bool ok, const std::string& input, const std::string& expected,
               const std::string& got);

    bool operator==(const AuditReport&) const = default;
};

// Checks curve(b) == curve(b + delta) at every breakpoint, with delta half
// the gap to the next probe. When `recompute` is given, the curve value at
// both points is also re-derived from scratch and compared.
AuditReport audit_right_continuity(const StepCurve& curve, std::vector<Rational> probes,
                                   const std::function<Rational(const Rational&)>& recompute = {});

// Exhibits a threshold C below every cell value and checks the sublevel chi
// vanishes at C and C - 1.
AuditReport audit_vanishing_threshold(const CellSummaries& summaries);

// Checks chi(band [t - delta, t + delta]) == chi(level t) with delta half
// the minimal gap between distinct cell thresholds.
AuditReport audit_middle_continuity(const SimplicialComplex& complex, const PLFunction& f,
                                    const Rational& t);

// Checks SELECT(g)(s - delta) + SELECT(-g)(-s - delta) == LECT(g)(s) + chi
// of the sublevel shape, with delta below the minimal gap between distinct
// values of g and s.
AuditReport audit_select_lect_identity(const CellConstFunction& g, const Direction& v,
                                       const Rational& t, const Rational& s);

// Characterizing axioms of chi on open-cell models: chi((0,1] x (0,1)^n) = 0
// for n <= 2, additivity over random disjoint unions, chi(point) = 1.
AuditReport audit_chi_axioms(std::mt19937_64& rng, int union_cases = 50);

// The half-line (0, infinity): chi bookkeeping for the sublevel sets near 0
// versus a compact control segment. The homotopy-level non-retraction is
// recorded as a note, not decided algorithmically.
AuditReport audit_noncompact_counterexample();

// Right continuity of t -> beta_k of the sublevel complex, plus the
// Euler-Poincare cross-check against the geometric clipping oracle at every
// breakpoint.
AuditReport audit_betti_right_continuity(const SimplicialComplex& complex, const Direction& v,
                                         int k);

// Full battery over the bundled fixtures. Audits run as independent jobs
// sharded over `workers` threads; reports merge in a fixed order, so the
// output is identical for any worker count.
std::vector<AuditReport> run_audit_battery(std::uint64_t seed, int workers = 1);

std::string reports_to_text(const std::vector<AuditReport>& reports);
std::string reports_to_json(const std::vector<AuditReport>& reports);

}  // namespace ect
