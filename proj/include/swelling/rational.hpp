#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace swelling {

// Arbitrary-precision integers and rationals. cpp_rational keeps the
// canonical form we rely on everywhere: lowest terms, denominator > 0.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const BigInt& x) { return x.sign(); }
inline int sign_of(const Rational& x) { return x.sign(); }

/// Floor division a/b rounded toward minus infinity. b must be nonzero.
BigInt floor_div(const BigInt& a, const BigInt& b);

/// Greatest integer <= x.
BigInt rat_floor(const Rational& x);

BigInt big_gcd(const BigInt& a, const BigInt& b);
BigInt big_lcm(const BigInt& a, const BigInt& b);

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on garbage
/// or zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (lowest terms, q > 0), or just "p" when q == 1.
std::string format_rational(const Rational& x);

/// Decimal rendering for diagnostics only; never used in verdicts.
double to_double_approx(const Rational& x);

}  // namespace swelling
