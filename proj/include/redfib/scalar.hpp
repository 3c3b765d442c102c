#ifndef REDFIB_SCALAR_HPP
#define REDFIB_SCALAR_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace redfib {

// Exact integer / rational scalars used by every exact computation path.
// Real is the high-precision float used only at reporting boundaries.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Real = boost::multiprecision::cpp_bin_float_50;

inline Real to_real(const Rational& q) { return Real(q); }
inline Real to_real(const BigInt& v) { return Real(v); }
inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const Real& x) { return x.convert_to<double>(); }

inline int sign_of(const BigInt& v) { return v.sign(); }
inline int sign_of(const Rational& q) { return q.sign(); }

// "p/q" when the denominator is not 1, plain integer string otherwise.
std::string rational_string(const Rational& q);

// Decimal rendering. Terminating rationals (denominator 2^a 5^b) are printed
// exactly; everything else is rounded to `digits` significant digits.
std::string decimal_string(const Rational& q, int digits);
std::string decimal_string(const Real& x, int digits);

// Accepts "p/q", optionally signed integers, and plain or exponent-form
// decimals ("0.25", "-3", "1e-3", "7/2"). Decimals convert exactly.
Rational parse_rational(const std::string& text);

}  // namespace redfib

#endif
