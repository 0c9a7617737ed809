#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace halo {

// Exact arithmetic everywhere; no floating point in any construction path.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RatVec = std::vector<Rational>;

/// "p/q" with canonical sign, or plain "p" when the denominator is 1.
inline std::string to_fraction_string(const Rational& r) {
    return r.str();
}

inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    return Rational(text);
}

/// Truncated decimal rendering, used only for display-oriented output (OFF files).
inline std::string to_decimal_string(const Rational& r, int digits = 12) {
    Integer num = numerator(r);
    Integer den = denominator(r);
    const bool neg = num < 0;
    if (neg) num = -num;
    Integer whole = num / den;
    Integer rem = num % den;
    std::string out = whole.str();
    if (rem != 0 && digits > 0) {
        std::string frac;
        for (int i = 0; i < digits && rem != 0; ++i) {
            rem *= 10;
            frac += static_cast<char>('0' + static_cast<int>(rem / den));
            rem %= den;
        }
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
    }
    if (neg && out != "0") out = "-" + out;
    return out;
}

inline Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace halo
