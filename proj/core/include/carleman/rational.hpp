#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace carleman {

using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q", "p" or a signed variant; throws ConfigError otherwise.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
double to_double(const Rational& r);

inline Rational frac(long long p, long long q) { return Rational(p, q); }

}  // namespace carleman
