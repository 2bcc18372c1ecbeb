#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace codetuple {

/// Exact rational with arbitrary-precision numerator and denominator, always
/// kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Accepts "p/q", an integer "p", or a finite decimal such as "0.3" or
/// "-1.25e-1". Decimals convert exactly ("0.1" is 1/10).
Rational parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

} // namespace codetuple
