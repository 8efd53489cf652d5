#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace ect {

using Integer = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (cpp_rational guarantees both).
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return numerator(q); }
inline Integer den(const Rational& q) { return denominator(q); }

// Serializes as "p/q", or just "p" when q == 1.
std::string to_string(const Rational& q);

// Accepts "p", "p/q", and plain decimal literals ("-0.25").
// Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

// Nearest rational with denominator exactly `denom_bound` (round half away
// from zero). Quantization happens once at ingestion; everything downstream
// is exact.
Rational quantize(double x, const Integer& denom_bound);

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Integer floor_div(const Integer& a, const Integer& b);

inline Integer rational_floor(const Rational& q) { return floor_div(num(q), den(q)); }
inline Integer rational_ceil(const Rational& q) { return -floor_div(-num(q), den(q)); }

// Returns the value if q is an integer, nullopt otherwise.
std::optional<Integer> as_integer(const Rational& q);

}  // namespace ect
