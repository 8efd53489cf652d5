#include "ect/curves.hpp"

#include <algorithm>
#include <stdexcept>

namespace ect {

StepCurve::StepCurve(std::vector<Rational> breakpoints, std::vector<Rational> values,
                     Continuity continuity)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)), continuity_(continuity) {
    if (values_.size() != breakpoints_.size() + 1)
        throw std::invalid_argument("step curve needs one more value than breakpoints");
    if (!std::is_sorted(breakpoints_.begin(), breakpoints_.end()) ||
        std::adjacent_find(breakpoints_.begin(), breakpoints_.end()) != breakpoints_.end())
        throw std::invalid_argument("breakpoints must be strictly increasing");
    canonicalize();
}

void StepCurve::canonicalize() {
    std::vector<Rational> bp, vals;
    vals.push_back(values_.front());
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        if (values_[i + 1] != vals.back()) {
            bp.push_back(breakpoints_[i]);
            vals.push_back(values_[i + 1]);
        }
    }
    breakpoints_ = std::move(bp);
    values_ = std::move(vals);
}

StepCurve StepCurve::from_samples(std::vector<Rational> candidates,
                                  const std::function<Rational(const Rational&)>& eval,
                                  Continuity continuity) {
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    if (candidates.empty()) {
        return StepCurve({}, {eval(Rational(0))}, continuity);
    }
    std::vector<Rational> values;
    values.reserve(candidates.size() + 1);
    if (continuity == Continuity::Right) {
        values.push_back(eval(candidates.front() - 1));
        // value on [b_i, b_{i+1}) is the value at b_i
        for (const auto& b : candidates) values.push_back(eval(b));
    } else {
        // value on (b_{i-1}, b_i] is the value at b_i
        for (const auto& b : candidates) values.push_back(eval(b));
        values.push_back(eval(candidates.back() + 1));
    }
    return StepCurve(std::move(candidates), std::move(values), continuity);
}

Rational StepCurve::value_at(const Rational& t) const {
    // index of the interval containing t under the storage convention
    if (continuity_ == Continuity::Right) {
        // first breakpoint > t; t lives in the interval to its left
        auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
        return values_[static_cast<std::size_t>(it - breakpoints_.begin())];
    }
    // Left: value at b is the left interval's value, i.e. intervals are
    // (b_{i-1}, b_i]
    auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
    return values_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

Rational StepCurve::left_limit_at(const Rational& t) const {
    auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
    return values_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

StepCurve StepCurve::scaled(const Rational& c) const {
    std::vector<Rational> vals = values_;
    for (auto& v : vals) v *= c;
    return StepCurve(breakpoints_, std::move(vals), continuity_);
}

StepCurve StepCurve::plus(const StepCurve& other) const {
    if (continuity_ != other.continuity_)
        throw std::invalid_argument("cannot add curves with different conventions");
    std::vector<Rational> bp;
    std::merge(breakpoints_.begin(), breakpoints_.end(), other.breakpoints_.begin(),
               other.breakpoints_.end(), std::back_inserter(bp));
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    std::vector<Rational> vals;
    vals.reserve(bp.size() + 1);
    if (bp.empty()) {
        vals.push_back(values_.front() + other.values_.front());
        return StepCurve({}, std::move(vals), continuity_);
    }
    if (continuity_ == Continuity::Right) {
        Rational probe = bp.front() - 1;
        vals.push_back(value_at(probe) + other.value_at(probe));
        for (const auto& b : bp) vals.push_back(value_at(b) + other.value_at(b));
    } else {
        for (const auto& b : bp) vals.push_back(value_at(b) + other.value_at(b));
        Rational probe = bp.back() + 1;
        vals.push_back(value_at(probe) + other.value_at(probe));
    }
    return StepCurve(std::move(bp), std::move(vals), continuity_);
}

PiecewiseLinearCurve::PiecewiseLinearCurve(std::vector<Rational> knots,
                                           std::vector<Rational> values)
    : knots_(std::move(knots)), values_(std::move(values)) {
    if (knots_.size() < 2 || knots_.size() != values_.size())
        throw std::invalid_argument("piecewise-linear curve needs matching knots/values, >= 2");
    if (!std::is_sorted(knots_.begin(), knots_.end()) ||
        std::adjacent_find(knots_.begin(), knots_.end()) != knots_.end())
        throw std::invalid_argument("knots must be strictly increasing");
}

Rational PiecewiseLinearCurve::value_at(const Rational& t) const {
    if (t < knots_.front() || t > knots_.back())
        throw std::out_of_range("evaluation outside curve domain");
    auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
    if (it == knots_.end()) return values_.back();
    std::size_t i = static_cast<std::size_t>(it - knots_.begin());
    if (i == 0) return values_.front();
    const Rational& t0 = knots_[i - 1];
    const Rational& t1 = knots_[i];
    return values_[i - 1] + (values_[i] - values_[i - 1]) * (t - t0) / (t1 - t0);
}

Rational PiecewiseLinearCurve::right_slope_at(const Rational& t) const {
    if (t < knots_.front() || t > knots_.back())
        throw std::out_of_range("evaluation outside curve domain");
    // segment starting at the last knot <= t (final segment at the end)
    auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
    std::size_t i = static_cast<std::size_t>(it - knots_.begin());
    if (i >= knots_.size()) i = knots_.size() - 1;
    if (i == 0) i = 1;
    return (values_[i] - values_[i - 1]) / (knots_[i] - knots_[i - 1]);
}

PiecewiseLinearCurve PiecewiseLinearCurve::scaled(const Rational& c) const {
    std::vector<Rational> vals = values_;
    for (auto& v : vals) v *= c;
    return PiecewiseLinearCurve(knots_, std::move(vals));
}

}  // namespace ect
