#pragma once

#include "ect/curves.hpp"
#include "ect/euler.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ect {

// --- step-curve transforms in t ------------------------------------------

// t -> chi(S_t^v) for the shape carried by the complex.
StepCurve ect_shape(const Complex& complex, const Direction& v);

// t -> integral of g * 1_{x.v <= t} dchi for integer-valued g.
StepCurve ect_constructible(const CellConstFunction& g, const Direction& v);

// t -> chi({g = s} ∩ {x.v <= t})  /  chi({g >= s} ∩ {x.v <= t}).
StepCurve lect(const CellConstFunction& g, const Direction& v, const Rational& s);
StepCurve select(const CellConstFunction& g, const Direction& v, const Rational& s);

// s -> SELECT(g)(v, t, s) at fixed t, stored left-continuously.
StepCurve select_in_s(const CellConstFunction& g, const Direction& v, const Rational& t);

// Euler-Radon transform curve, computed through the Lebesgue representation
// integral over s of {SELECT(g) - SELECT(-g)} + (1/2){LECT(-g) - LECT(g)}.
StepCurve ert(const CellConstFunction& g, const Direction& v);

// Single ERT value at (v, t) through the same representation.
Rational ert_value(const CellConstFunction& g, const Direction& v, const Rational& t);

// n-th floor/ceiling approximant of the Euler integral of g * 1_{x.v <= t}:
// (1/2n) * (integral of floor(n g) + integral of ceil(n g)).
Rational euler_integral_fc(const CellConstFunction& g, const Direction& v, const Rational& t,
                           unsigned n);

// --- smoothing and inversion ---------------------------------------------

// Centered running integral on [-W, W]. Requires the step curve to vanish
// left of all breakpoints and all breakpoints strictly inside (-W, W).
PiecewiseLinearCurve sect(const StepCurve& step, const Rational& window);

// Recovers the step curve from its smoothed form via right slopes.
StepCurve invert_sect(const PiecewiseLinearCurve& smooth);

// SERT shares the SECT formulas with the ERT curve in place of the ECT.
inline PiecewiseLinearCurve sert(const StepCurve& ert_curve, const Rational& window) {
    return sect(ert_curve, window);
}
inline StepCurve invert_sert(const PiecewiseLinearCurve& smooth) { return invert_sect(smooth); }

// Default window: (max |breakpoint|) + 1, at least 1.
Rational default_window(const StepCurve& step);

// --- direction-sampled bundles -------------------------------------------

using AnyCurve = std::variant<StepCurve, PiecewiseLinearCurve>;

struct TransformBundle {
    std::vector<Direction> directions;
    std::vector<AnyCurve> curves;  // one per direction
    std::optional<Rational> window;
    std::string source;      // shape/function identifier
    std::string convention;  // e.g. lower-cell convention flag

    bool operator==(const TransformBundle& o) const = default;
};

}  // namespace ect
