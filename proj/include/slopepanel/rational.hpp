#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace slopepanel {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// `p/q` in lowest terms, or a plain integer when q == 1.
inline std::string to_string(const Rational& x) { return x.str(); }

inline std::string to_string(const Integer& x) { return x.str(); }

std::string join(const std::vector<Rational>& xs, const char* sep = ",");

Rational pow(const Rational& base, unsigned exponent);

inline bool is_integer(const Rational& x) {
    return boost::multiprecision::denominator(x) == 1;
}

}  // namespace slopepanel
