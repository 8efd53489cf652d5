#pragma once

#include "ect/rational.hpp"

#include <functional>
#include <vector>

namespace ect {

// Storage convention for the value at a breakpoint: Right (cadlag) means
// the value at b is the value on [b, next); Left means it is the value on
// (prev, b]. Curves in t are Right, the s-slice of SELECT is Left.
enum class Continuity { Right, Left };

// Piecewise-constant function with exact rational breakpoints, stored in
// canonical form (adjacent values differ). values has one more entry than
// breakpoints: value on (-inf, b_1), on each middle interval, and on the
// last interval to +inf.
class StepCurve {
public:
    StepCurve() : values_{Rational(0)} {}
    StepCurve(std::vector<Rational> breakpoints, std::vector<Rational> values,
              Continuity continuity = Continuity::Right);

    // Samples `eval` at the candidate thresholds (sorted, deduped) and the
    // surrounding intervals; eval must be constant between candidates.
    static StepCurve from_samples(std::vector<Rational> candidates,
                                  const std::function<Rational(const Rational&)>& eval,
                                  Continuity continuity = Continuity::Right);

    static StepCurve zero() { return StepCurve(); }

    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<Rational>& values() const { return values_; }
    Continuity continuity() const { return continuity_; }

    Rational value_at(const Rational& t) const;
    // Limit from the left at t (exists everywhere; this is the cadlag left
    // limit for Right curves).
    Rational left_limit_at(const Rational& t) const;

    bool is_zero() const { return breakpoints_.empty() && values_.front() == 0; }

    StepCurve scaled(const Rational& c) const;
    StepCurve plus(const StepCurve& other) const;

    bool operator==(const StepCurve& o) const = default;

private:
    void canonicalize();

    std::vector<Rational> breakpoints_;
    std::vector<Rational> values_;
    Continuity continuity_ = Continuity::Right;
};

// Continuous piecewise-linear function on [knots.front(), knots.back()].
class PiecewiseLinearCurve {
public:
    PiecewiseLinearCurve() = default;
    PiecewiseLinearCurve(std::vector<Rational> knots, std::vector<Rational> values);

    const std::vector<Rational>& knots() const { return knots_; }
    const std::vector<Rational>& values() const { return values_; }
    Rational domain_min() const { return knots_.front(); }
    Rational domain_max() const { return knots_.back(); }

    Rational value_at(const Rational& t) const;
    // Slope on the segment to the right of t (at the last knot: the slope
    // of the final segment).
    Rational right_slope_at(const Rational& t) const;

    PiecewiseLinearCurve scaled(const Rational& c) const;

    bool operator==(const PiecewiseLinearCurve& o) const = default;

private:
    std::vector<Rational> knots_;
    std::vector<Rational> values_;
};

}  // namespace ect
