#pragma once

#include "ect/functions.hpp"

namespace ect {

// Preimage-set query against a function summarized per cell: sublevel,
// strict sublevel, level, superlevel, strict superlevel, or closed band.
struct IntervalQuery {
    enum class Kind { Leq, Lt, Eq, Geq, Gt, Band };
    Kind kind = Kind::Leq;
    Rational a;  // threshold (or band lower endpoint)
    Rational b;  // band upper endpoint

    static IntervalQuery leq(Rational t) { return {Kind::Leq, std::move(t), {}}; }
    static IntervalQuery lt(Rational t) { return {Kind::Lt, std::move(t), {}}; }
    static IntervalQuery eq(Rational s) { return {Kind::Eq, std::move(s), {}}; }
    static IntervalQuery geq(Rational s) { return {Kind::Geq, std::move(s), {}}; }
    static IntervalQuery gt(Rational s) { return {Kind::Gt, std::move(s), {}}; }
    static IntervalQuery band(Rational t1, Rational t2);
};

struct ChiReport {
    long long value = 0;
    std::size_t cells_counted = 0;
};

// chi of (open cell) intersect (query set), in closed form from the cell's
// function range. Leq/Lt are the primitives; the rest are differences.
long long cell_chi_contribution(const CellSummary& summary, const IntervalQuery& q);

// Finite additivity of chi over the open-cell partition.
ChiReport chi_preimage(const CellSummaries& summaries, const IntervalQuery& q);

// chi of the whole complex (every cell, no clipping).
long long chi_total(const CellSummaries& summaries);

// Euler integral of an integer-valued cell-constant function:
// sum over n of n * chi(g^{-1}(n)). Throws if g is not integer-valued.
Integer euler_integral(const CellConstFunction& g);

inline long long chi_disjoint_union(const ChiReport& a, const ChiReport& b) {
    return a.value + b.value;
}
inline long long chi_product(const ChiReport& a, const ChiReport& b) {
    return a.value * b.value;
}

}  // namespace ect
