#pragma once

#include <boost/rational.hpp>

#include <string>

namespace modspace {

/// Exact arithmetic for all index comparisons. Endpoint clauses contain
/// equality tests, so nothing here may pass through floating point.
using Rational = boost::rational<long long>;

double to_double(const Rational& r);

/// Parses "a", "-a", "a/b". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

std::string format_rational(const Rational& r);

inline Rational rational_max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational rational_min(const Rational& a, const Rational& b) { return b < a ? b : a; }

/// a ∨ 0
inline Rational positive_part(const Rational& a) { return a > Rational(0) ? a : Rational(0); }

}  // namespace modspace
