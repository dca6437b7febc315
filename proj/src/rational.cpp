#include "swelling/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <stdexcept>

namespace swelling {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw std::invalid_argument("floor_div: zero divisor");
  BigInt q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt rat_floor(const Rational& x) {
  return floor_div(numerator(x), denominator(x));
}

BigInt big_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

BigInt big_lcm(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::lcm(a, b);
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("parse_rational: bad input '" + s + "'");
  }
}

std::string format_rational(const Rational& x) {
  std::string out = numerator(x).str();
  if (denominator(x) != 1) {
    out += "/";
    out += denominator(x).str();
  }
  return out;
}

double to_double_approx(const Rational& x) {
  return static_cast<double>(x);
}

}  // namespace swelling
