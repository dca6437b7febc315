#pragma once

#include "swelling/rational.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace swelling {

/// Element of the ordered field Q(sqrt2), stored as rat + irr*sqrt(2).
/// The representation is unique (1 and sqrt2 are Q-linearly independent),
/// so equality is componentwise. All arithmetic is exact; the order is the
/// one induced by the real embedding and is decided without floating point.
struct QuadScalar {
  Rational rat;
  Rational irr;

  QuadScalar() = default;
  QuadScalar(Rational r, Rational i) : rat(std::move(r)), irr(std::move(i)) {}
  explicit QuadScalar(long n) : rat(n), irr(0) {}
  static QuadScalar of_rational(Rational r) { return {std::move(r), Rational(0)}; }
  static QuadScalar sqrt2() { return {Rational(0), Rational(1)}; }

  bool is_rational() const { return irr == 0; }
  bool is_zero() const { return rat == 0 && irr == 0; }

  /// Exact sign of the embedded real value: -1, 0 or +1.
  int sign() const;

  QuadScalar operator-() const { return {-rat, -irr}; }
  QuadScalar operator+(const QuadScalar& o) const { return {rat + o.rat, irr + o.irr}; }
  QuadScalar operator-(const QuadScalar& o) const { return {rat - o.rat, irr - o.irr}; }
  QuadScalar operator*(const QuadScalar& o) const;
  /// Throws std::domain_error when o == 0.
  QuadScalar operator/(const QuadScalar& o) const;

  QuadScalar& operator+=(const QuadScalar& o) { rat += o.rat; irr += o.irr; return *this; }
  QuadScalar& operator-=(const QuadScalar& o) { rat -= o.rat; irr -= o.irr; return *this; }

  bool operator==(const QuadScalar& o) const { return rat == o.rat && irr == o.irr; }
  std::strong_ordering operator<=>(const QuadScalar& o) const {
    int s = (*this - o).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Greatest integer <= value. Exact for rationals; for irrational values
  /// refines a continued-fraction enclosure of sqrt2 until the enclosure of
  /// the whole number pins the integer part.
  BigInt floor() const;

  double to_double_approx() const;
};

/// Three-way comparison as an int in {-1, 0, +1}.
int qs_cmp(const QuadScalar& x, const QuadScalar& y);

inline QuadScalar qs_abs(const QuadScalar& x) { return x.sign() < 0 ? -x : x; }

/// Canonical serialization "p/q+r/s*sqrt2" (lowest terms, denominators kept
/// even when 1, irr sign folded into the middle operator).
std::string format_quad(const QuadScalar& x);

/// Short human-readable form: "3", "-1/2", "sqrt2", "1/2-3*sqrt2", ...
std::string format_quad_short(const QuadScalar& x);

/// Accepts the canonical form plus shorthands: "3", "-1/2", "sqrt2",
/// "2*sqrt2", "1+1*sqrt2", "1/2-sqrt2". Throws std::invalid_argument.
QuadScalar parse_quad(std::string_view text);

}  // namespace swelling
