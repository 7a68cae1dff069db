#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace conemom {

// Exact arithmetic types.  All certification logic (root counting, Smith
// forms, LP pivoting) runs on these; doubles appear only at the reporting
// boundary and inside quadrature.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline int sign(const Rational& q) { return q.sign(); }
inline int sign(const Int& n) { return n.sign(); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Exact binary value of a finite double.  Rejects NaN and infinities.
Rational rational_from_double(double x);

// Accepts "p/q", plain integers, and decimal/scientific literals
// ("-3", "5/3", "1.25e-3"); decimals convert exactly.
Rational parse_rational(std::string_view text);

// "n" when the denominator is 1, else "n/d".
std::string to_string(const Rational& q);

// 2^-e as a Rational; the default root-isolation width is pow2(-64).
Rational pow2(long e);

} // namespace conemom
