#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace apolar {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. Always stored reduced with positive denominator;
// arithmetic never rounds.
using Rational = boost::multiprecision::cpp_rational;

// Serializes as "p/q", with "/q" omitted when q == 1 (e.g. "-3/2", "7").
std::string to_string(const Rational& r);

// Parses the "p/q" format. Rejects anything else (in particular decimal
// floats: the toolkit works over the rationals only).
Rational parse_rational(const std::string& s);

Int factorial(int n);

// Largest integer <= r and smallest integer >= r.
Int floor_int(const Rational& r);
Int ceil_int(const Rational& r);

Rational pow_rational(const Rational& base, int exp);

}  // namespace apolar
