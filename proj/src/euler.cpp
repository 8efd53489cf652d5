#include "ect/euler.hpp"

#include <map>
#include <stdexcept>

namespace ect {

IntervalQuery IntervalQuery::band(Rational t1, Rational t2) {
    if (t1 > t2) throw std::invalid_argument("band requires t1 <= t2");
    return {Kind::Band, std::move(t1), std::move(t2)};
}

namespace {

inline long long sign_of_dim(int k) { return (k % 2 == 0) ? 1 : -1; }

// chi of the open cell clipped to {f <= t}.
long long chi_leq(const CellSummary& s, const Rational& t) {
    if (s.constant) return (s.lo <= t) ? sign_of_dim(s.dim) : 0;
    return (t >= s.hi) ? sign_of_dim(s.dim) : 0;
}

// chi of the open cell clipped to {f < t}.
long long chi_lt(const CellSummary& s, const Rational& t) {
    if (s.constant) return (s.lo < t) ? sign_of_dim(s.dim) : 0;
    return (t > s.lo) ? sign_of_dim(s.dim) : 0;
}

}  // namespace

long long cell_chi_contribution(const CellSummary& s, const IntervalQuery& q) {
    const long long total = sign_of_dim(s.dim);
    switch (q.kind) {
        case IntervalQuery::Kind::Leq:
            return chi_leq(s, q.a);
        case IntervalQuery::Kind::Lt:
            return chi_lt(s, q.a);
        case IntervalQuery::Kind::Eq:
            return chi_leq(s, q.a) - chi_lt(s, q.a);
        case IntervalQuery::Kind::Geq:
            return total - chi_lt(s, q.a);
        case IntervalQuery::Kind::Gt:
            return total - chi_leq(s, q.a);
        case IntervalQuery::Kind::Band:
            return chi_leq(s, q.b) - chi_lt(s, q.a);
    }
    return 0;
}

ChiReport chi_preimage(const CellSummaries& summaries, const IntervalQuery& q) {
    ChiReport r;
    for (const auto& s : summaries) {
        r.value += cell_chi_contribution(s, q);
        ++r.cells_counted;
    }
    return r;
}

long long chi_total(const CellSummaries& summaries) {
    long long chi = 0;
    for (const auto& s : summaries) chi += sign_of_dim(s.dim);
    return chi;
}

Integer euler_integral(const CellConstFunction& g) {
    // Group cells by value n, take chi of each level set, then sum n * chi.
    std::map<Integer, long long> level_chi;
    for (std::size_t i = 0; i < g.cell_values.size(); ++i) {
        auto n = as_integer(g.cell_values[i]);
        if (!n) throw std::invalid_argument("not constructible: non-integer value");
        if (*n == 0) continue;
        level_chi[*n] += sign_of_dim(g.complex->cells()[i].dim);
    }
    Integer out = 0;
    for (const auto& [n, chi] : level_chi) out += n * chi;
    return out;
}

}  // namespace ect
