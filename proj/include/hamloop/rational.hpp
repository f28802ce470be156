#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "hamloop/errors.hpp"

namespace hamloop {

// Exact scalars. cpp_rational keeps values in lowest terms with a positive
// denominator, which is exactly the representation invariant we need.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using QVec = std::vector<Rational>;
using IVec = std::vector<Int>;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

/// Canonical text form: "p" when integral, "p/q" otherwise.
std::string format_rational(const Rational& q);

/// Parses "p" or "p/q" (optional leading sign, q > 0 after reduction).
Rational parse_rational(const std::string& text);

/// Reduces q modulo 1 into [0, 1).
Rational mod1(const Rational& q);

/// Nonnegative generator of the ideal a*Z + b*Z inside the rationals.
Rational rational_gcd(const Rational& a, const Rational& b);

/// Least common denominator of a rational vector (1 for the empty vector).
Int common_denominator(const QVec& v);

std::string format_vector(const QVec& v);

}  // namespace hamloop
