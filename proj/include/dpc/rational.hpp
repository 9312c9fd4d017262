#pragma once

// Charges are exact: arbitrary-precision rationals, never floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace dpc {

using Rational = boost::multiprecision::cpp_rational;

inline Rational frac(long num, long den) { return Rational(num, den); }

// "p" when integral, "p/q" otherwise.
inline std::string to_string(const Rational& r)
{
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace dpc
