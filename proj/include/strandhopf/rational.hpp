#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace strandhopf {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& q) { return q.str(); }

// Parses "a", "-a", "a/b".
Rational parse_rational(const std::string& s);

inline Rational floor_to_rational(const Rational& q) {
    BigInt n = boost::multiprecision::numerator(q), d = boost::multiprecision::denominator(q);
    BigInt f = n / d;
    if (n < 0 && f * d != n) f -= 1;
    return Rational(f);
}

}  // namespace strandhopf
