#include "ect/rational.hpp"

#include <cmath>
#include <cstdlib>

namespace ect {

std::string to_string(const Rational& q) {
    std::string s = num(q).str();
    if (den(q) != 1) {
        s += "/";
        s += den(q).str();
    }
    return s;
}

namespace {

// Strictly decimal integer parsing. cpp_int's string constructor treats a
// leading zero as an octal prefix, so literals like "0333" must not reach
// it verbatim.
Integer parse_decimal_integer(const std::string& s) {
    std::size_t i = 0;
    bool negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';
    if (i == s.size()) throw std::invalid_argument("malformed integer literal: " + s);
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9')
            throw std::invalid_argument("malformed integer literal: " + s);
    while (i + 1 < s.size() && s[i] == '0') ++i;
    Integer v(s.substr(i));
    return negative ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Integer p = parse_decimal_integer(s.substr(0, slash));
        Integer q = parse_decimal_integer(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rational(p, q);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(parse_decimal_integer(s));
    // decimal literal: shift the fractional digits into the denominator
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    if (frac_len == 0) return Rational(parse_decimal_integer(digits));
    Integer scale = 1;
    for (std::size_t i = 0; i < frac_len; ++i) scale *= 10;
    return Rational(parse_decimal_integer(digits), scale);
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

Rational quantize(double x, const Integer& denom_bound) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite coordinate");
    if (denom_bound <= 0) throw std::invalid_argument("denominator bound must be positive");
    // round(x * denom_bound) with half away from zero, done in double; the
    // bound is assumed small enough that x * bound stays integral-safe.
    double scaled = x * static_cast<double>(denom_bound);
    double rounded = std::round(scaled);
    Integer p(static_cast<long long>(rounded));
    return Rational(p, denom_bound);
}

std::optional<Integer> as_integer(const Rational& q) {
    if (den(q) == 1) return num(q);
    return std::nullopt;
}

}  // namespace ect
