#include "swelling/quad.hpp"

#include <cmath>
#include <stdexcept>

namespace swelling {

int QuadScalar::sign() const {
  int sp = sign_of(rat);
  int sq = sign_of(irr);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Opposite signs: |rat| vs |irr|*sqrt2, i.e. rat^2 vs 2*irr^2. Equality is
  // impossible with irr != 0 (it would make sqrt2 rational).
  Rational p2 = rat * rat;
  Rational q2 = Rational(2) * irr * irr;
  return p2 > q2 ? sp : sq;
}

QuadScalar QuadScalar::operator*(const QuadScalar& o) const {
  // (p+q*sqrt2)(r+s*sqrt2) = (pr+2qs) + (ps+qr)*sqrt2
  return {rat * o.rat + Rational(2) * irr * o.irr, rat * o.irr + irr * o.rat};
}

QuadScalar QuadScalar::operator/(const QuadScalar& o) const {
  if (o.is_zero()) throw std::domain_error("QuadScalar: division by zero");
  // Multiply by the conjugate; the norm r^2 - 2 s^2 vanishes only at zero.
  Rational norm = o.rat * o.rat - Rational(2) * o.irr * o.irr;
  QuadScalar num = *this * QuadScalar{o.rat, -o.irr};
  return {num.rat / norm, num.irr / norm};
}

BigInt QuadScalar::floor() const {
  if (irr == 0) return rat_floor(rat);
  // Continued-fraction convergents of sqrt2: (1,1), (3,2), (7,5), (17,12)...
  // p/q is below sqrt2 iff p^2 < 2 q^2; consecutive convergents alternate
  // sides, so tracking the latest on each side gives a shrinking enclosure.
  BigInt p = 1, q = 1;
  Rational lo(1), hi(3, 2);
  for (;;) {
    Rational x_lo = rat + irr * (irr > 0 ? lo : hi);
    Rational x_hi = rat + irr * (irr > 0 ? hi : lo);
    BigInt f_lo = rat_floor(x_lo);
    if (f_lo == rat_floor(x_hi)) return f_lo;
    BigInt np = p + 2 * q, nq = p + q;
    p = np;
    q = nq;
    if (p * p < 2 * q * q)
      lo = Rational(p, q);
    else
      hi = Rational(p, q);
  }
}

double QuadScalar::to_double_approx() const {
  return swelling::to_double_approx(rat) + std::sqrt(2.0) * swelling::to_double_approx(irr);
}

int qs_cmp(const QuadScalar& x, const QuadScalar& y) {
  return (x - y).sign();
}

std::string format_quad(const QuadScalar& x) {
  std::string out = numerator(x.rat).str() + "/" + denominator(x.rat).str();
  Rational i = x.irr;
  if (i < 0) {
    out += "-";
    i = -i;
  } else {
    out += "+";
  }
  out += numerator(i).str() + "/" + denominator(i).str() + "*sqrt2";
  return out;
}

std::string format_quad_short(const QuadScalar& x) {
  if (x.irr == 0) return format_rational(x.rat);
  std::string irr_part;
  Rational ai = x.irr < 0 ? Rational(-x.irr) : x.irr;
  if (ai == 1)
    irr_part = "sqrt2";
  else
    irr_part = format_rational(ai) + "*sqrt2";
  if (x.rat == 0) return (x.irr < 0 ? "-" : "") + irr_part;
  return format_rational(x.rat) + (x.irr < 0 ? "-" : "+") + irr_part;
}

namespace {

// One additive term: either "r", "r*sqrt2" or "sqrt2", with r a rational
// literal. `text` has no whitespace by the time we get here.
QuadScalar parse_term(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("parse_quad: empty term");
  bool neg = false;
  if (text.front() == '+' || text.front() == '-') {
    neg = text.front() == '-';
    text.remove_prefix(1);
  }
  QuadScalar out;
  if (text == "sqrt2") {
    out = QuadScalar::sqrt2();
  } else if (auto star = text.find('*'); star != std::string_view::npos) {
    if (text.substr(star + 1) != "sqrt2")
      throw std::invalid_argument("parse_quad: expected '*sqrt2'");
    out = QuadScalar{Rational(0), parse_rational(text.substr(0, star))};
  } else {
    out = QuadScalar::of_rational(parse_rational(text));
  }
  return neg ? -out : out;
}

}  // namespace

QuadScalar parse_quad(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("parse_quad: empty string");

  // Split at the last top-level '+'/'-' that is not a leading sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] == '+' || s[i] == '-') split = i;
  }
  if (split == std::string::npos) return parse_term(s);
  QuadScalar lhs = parse_term(std::string_view(s).substr(0, split));
  QuadScalar rhs = parse_term(std::string_view(s).substr(split));
  if (lhs.irr != 0 && rhs.irr != 0)
    throw std::invalid_argument("parse_quad: two sqrt2 terms in '" + s + "'");
  return lhs + rhs;
}

}  // namespace swelling
