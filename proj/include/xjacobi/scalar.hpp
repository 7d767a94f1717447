#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

namespace xjacobi {

/// Exact scalar: arbitrary-precision rational. All eigen-equation and
/// F-space checks run in this mode; floating point is used for quadrature
/// and root finding only, with explicit conversion points.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Float comparison: relative 1e-12 with absolute floor 1e-14.
inline bool nearly_equal(double x, double y, double rel = 1e-12, double abs_floor = 1e-14) {
    const double d = std::fabs(x - y);
    if (d <= abs_floor) return true;
    return d <= rel * std::max(std::fabs(x), std::fabs(y));
}

/// Parses "p/q", integers, and plain decimals ("-0.25" becomes -1/4 exactly).
/// Returns nullopt on malformed input.
std::optional<Rational> parse_rational(std::string_view s);

/// "p/q" for non-integers, plain "p" otherwise.
std::string rational_to_string(const Rational& r);

}  // namespace xjacobi
