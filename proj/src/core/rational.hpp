#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <string>

namespace scl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

// Sign lives on the numerator; boost::rational would reject a negative
// cpp_int denominator because unbounded types report no numeric_limits max.
inline Rat make_rat(long long num, long long den = 1) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(Int(num), Int(den));
}

// Renders as "p/q" with the denominator always present ("0/1", "3/1", "11/6").
std::string rat_to_string(const Rat& r);

// Accepts "p/q" or a bare integer "p"; whitespace around tokens is ignored.
// Throws std::invalid_argument on malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

// Decimal rendering with `sig_digits` significant digits, round half away
// from zero, no exponent notation. Exact long division, so the output is
// platform independent. rat_to_decimal(11/6, 12) == "1.83333333333".
std::string rat_to_decimal(const Rat& r, int sig_digits = 12);

}  // namespace scl
