#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

namespace taulab {

// All correctness-relevant arithmetic is exact.  Ray coordinates grow like
// products of word matrices (hundreds of digits for long iterations), so the
// integer type is arbitrary precision throughout.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const BigInt& v) { return v.sign(); }

// Division rounding toward -inf, so that q*b + r == a with r in [0, b).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

// Rationals print as "p/q", integers as plain "p".
inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace taulab
