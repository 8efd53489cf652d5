#include "ect/transforms.hpp"

#include <algorithm>
#include <stdexcept>

namespace ect {

namespace {

std::vector<Rational> threshold_candidates(const CellSummaries& summaries) {
    std::vector<Rational> out;
    out.reserve(summaries.size() * 2);
    for (const auto& s : summaries) {
        out.push_back(s.lo);
        out.push_back(s.hi);
    }
    return out;
}

// chi of {cells selected by pred} ∩ {x.v <= t}
Rational chi_selected(const CellSummaries& summaries, const std::vector<char>& selected,
                      const Rational& t) {
    long long chi = 0;
    auto q = IntervalQuery::leq(t);
    for (std::size_t i = 0; i < summaries.size(); ++i)
        if (selected[i]) chi += cell_chi_contribution(summaries[i], q);
    return Rational(chi);
}

std::vector<char> cells_with_value_eq(const CellConstFunction& g, const Rational& s) {
    std::vector<char> sel(g.cell_values.size());
    for (std::size_t i = 0; i < sel.size(); ++i) sel[i] = (g.cell_values[i] == s);
    return sel;
}

std::vector<char> cells_with_value_geq(const CellConstFunction& g, const Rational& s) {
    std::vector<char> sel(g.cell_values.size());
    for (std::size_t i = 0; i < sel.size(); ++i) sel[i] = (g.cell_values[i] >= s);
    return sel;
}

}  // namespace

StepCurve ect_shape(const Complex& complex, const Direction& v) {
    auto summaries = height_summaries(complex, v);
    return StepCurve::from_samples(
        threshold_candidates(summaries), [&](const Rational& t) {
            return Rational(chi_preimage(summaries, IntervalQuery::leq(t)).value);
        });
}

StepCurve ect_constructible(const CellConstFunction& g, const Direction& v) {
    if (!g.integer_valued()) throw std::invalid_argument("not constructible: non-integer values");
    auto summaries = height_summaries(*g.complex, v);
    return StepCurve::from_samples(
        threshold_candidates(summaries), [&](const Rational& t) {
            // sum over n of n * chi(g^{-1}(n) ∩ halfspace)
            Rational acc = 0;
            for (const auto& n : g.value_set()) {
                if (n == 0) continue;
                acc += n * chi_selected(summaries, cells_with_value_eq(g, n), t);
            }
            return acc;
        });
}

StepCurve lect(const CellConstFunction& g, const Direction& v, const Rational& s) {
    auto summaries = height_summaries(*g.complex, v);
    auto sel = cells_with_value_eq(g, s);
    return StepCurve::from_samples(
        threshold_candidates(summaries),
        [&](const Rational& t) { return chi_selected(summaries, sel, t); });
}

StepCurve select(const CellConstFunction& g, const Direction& v, const Rational& s) {
    auto summaries = height_summaries(*g.complex, v);
    auto sel = cells_with_value_geq(g, s);
    return StepCurve::from_samples(
        threshold_candidates(summaries),
        [&](const Rational& t) { return chi_selected(summaries, sel, t); });
}

StepCurve select_in_s(const CellConstFunction& g, const Direction& v, const Rational& t) {
    auto summaries = height_summaries(*g.complex, v);
    return StepCurve::from_samples(
        g.value_set(),
        [&](const Rational& s) {
            return chi_selected(summaries, cells_with_value_geq(g, s), t);
        },
        Continuity::Left);
}

namespace {

void check_support(const CellConstFunction& g) {
    // compute_support_bound returns (max L1 over nonzero cells) + 1; strict
    // containment in the radius-W ball needs max L1 < W.
    Rational actual = compute_support_bound(*g.complex, g.cell_values);
    if (actual - 1 >= g.support_bound)
        throw std::invalid_argument("support condition violated: nonzero cells outside bound");
}

// integral over s in (0, inf) of G(v, t, s) ds, evaluated exactly: G is a
// step function of s whose breakpoints lie among the |values| of g. SELECT
// terms are constant on each (a, b] and sampled at b; LECT terms are
// sampled at interior points, where level sets of a cell-constant g are
// empty, so they contribute zero as the formula predicts.
Rational lebesgue_s_integral(const CellConstFunction& g, const CellSummaries& summaries,
                             const Rational& t) {
    const CellConstFunction neg = g.negated();
    std::vector<Rational> thresholds{Rational(0)};
    for (const auto& val : g.value_set())
        if (val != 0) thresholds.push_back(rational_abs(val));
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

    Rational integral = 0;
    for (std::size_t i = 0; i + 1 < thresholds.size(); ++i) {
        const Rational &a = thresholds[i], &b = thresholds[i + 1];
        const Rational mid = (a + b) / 2;
        Rational G = chi_selected(summaries, cells_with_value_geq(g, b), t) -
                     chi_selected(summaries, cells_with_value_geq(neg, b), t);
        G += (chi_selected(summaries, cells_with_value_eq(neg, mid), t) -
              chi_selected(summaries, cells_with_value_eq(g, mid), t)) /
             2;
        integral += (b - a) * G;
    }
    return integral;
}

}  // namespace

Rational ert_value(const CellConstFunction& g, const Direction& v, const Rational& t) {
    check_support(g);
    auto summaries = height_summaries(*g.complex, v);
    return lebesgue_s_integral(g, summaries, t);
}

StepCurve ert(const CellConstFunction& g, const Direction& v) {
    check_support(g);
    auto summaries = height_summaries(*g.complex, v);
    return StepCurve::from_samples(
        threshold_candidates(summaries),
        [&](const Rational& t) { return lebesgue_s_integral(g, summaries, t); });
}

Rational euler_integral_fc(const CellConstFunction& g, const Direction& v, const Rational& t,
                           unsigned n) {
    if (n == 0) throw std::invalid_argument("approximation order must be >= 1");
    auto summaries = height_summaries(*g.complex, v);
    const auto q = IntervalQuery::leq(t);
    Rational acc = 0;
    for (std::size_t i = 0; i < summaries.size(); ++i) {
        Rational scaled = g.cell_values[i] * n;
        Rational coeff = Rational(rational_floor(scaled)) + Rational(rational_ceil(scaled));
        if (coeff == 0) continue;
        acc += coeff * cell_chi_contribution(summaries[i], q);
    }
    return acc / (2 * Rational(n));
}

PiecewiseLinearCurve sect(const StepCurve& step, const Rational& window) {
    if (window <= 0) throw std::invalid_argument("window must be positive");
    if (step.values().front() != 0)
        throw std::invalid_argument("curve must vanish left of all breakpoints");
    if (step.breakpoints().empty()) {
        // identically zero (nonzero constants were rejected above)
        return PiecewiseLinearCurve({-window, window}, {Rational(0), Rational(0)});
    }
    if (step.breakpoints().front() <= -window || step.breakpoints().back() >= window)
        throw std::invalid_argument("window too small");

    std::vector<Rational> knots;
    knots.push_back(-window);
    for (const auto& b : step.breakpoints()) knots.push_back(b);
    knots.push_back(window);

    // running integral of the step curve from -W
    std::vector<Rational> running{Rational(0)};
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const Rational seg = step.value_at(knots[i]) * (knots[i + 1] - knots[i]);
        running.push_back(running.back() + seg);
    }
    const Rational total = running.back();

    std::vector<Rational> values;
    values.reserve(knots.size());
    for (std::size_t i = 0; i < knots.size(); ++i)
        values.push_back(running[i] - (knots[i] + window) / (2 * window) * total);
    return PiecewiseLinearCurve(std::move(knots), std::move(values));
}

StepCurve invert_sect(const PiecewiseLinearCurve& smooth) {
    const auto& knots = smooth.knots();
    const Rational base_slope = smooth.right_slope_at(knots.front());
    std::vector<Rational> bp(knots.begin() + 1, knots.end() - 1);
    std::vector<Rational> values;
    values.push_back(0);
    for (const auto& b : bp) values.push_back(smooth.right_slope_at(b) - base_slope);
    if (values.size() == 1) return StepCurve({}, {Rational(0)});
    return StepCurve(std::move(bp), std::move(values));
}

Rational default_window(const StepCurve& step) {
    Rational w = 1;
    for (const auto& b : step.breakpoints()) {
        Rational a = rational_abs(b) + 1;
        if (a > w) w = a;
    }
    return w;
}

}  // namespace ect
