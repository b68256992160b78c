// Exact rational coefficients. Always kept in lowest terms with a positive
// denominator; zero is 0/1. Backed by boost::multiprecision (header-only).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nnov {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_text(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

// Canonical "p/q" form used by the JSON schema (denominator always present).
inline std::string rational_fraction_text(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_parse(std::string_view text);

}  // namespace nnov
