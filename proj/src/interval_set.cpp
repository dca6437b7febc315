#include "swelling/interval_set.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace swelling {

namespace {

const QuadScalar kTwo{Rational(2), Rational(0)};

QuadScalar midpoint(const QuadScalar& x, const QuadScalar& y) { return (x + y) / kTwo; }

}  // namespace

IntervalSet IntervalSet::normalize(std::vector<Interval> raw) {
  for (const auto& iv : raw)
    if (iv.lo > iv.hi) throw std::invalid_argument("interval with lo > hi");
  std::sort(raw.begin(), raw.end(), [](const Interval& x, const Interval& y) {
    if (x.lo != y.lo) return x.lo < y.lo;
    return x.hi < y.hi;
  });
  IntervalSet out;
  for (auto& iv : raw) {
    // Touching closed intervals ([0,1],[1,2]) merge into one.
    if (!out.pieces_.empty() && iv.lo <= out.pieces_.back().hi) {
      if (iv.hi > out.pieces_.back().hi) out.pieces_.back().hi = std::move(iv.hi);
    } else {
      out.pieces_.push_back(std::move(iv));
    }
  }
  return out;
}

IntervalSet IntervalSet::single(QuadScalar lo, QuadScalar hi) {
  return normalize({Interval{std::move(lo), std::move(hi)}});
}

bool IntervalSet::contains(const QuadScalar& x) const {
  for (const auto& iv : pieces_) {
    if (x < iv.lo) return false;
    if (x <= iv.hi) return true;
  }
  return false;
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> raw = a.pieces();
  raw.insert(raw.end(), b.pieces().begin(), b.pieces().end());
  return IntervalSet::normalize(std::move(raw));
}

IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < a.pieces().size() && j < b.pieces().size()) {
    const Interval& x = a.pieces()[i];
    const Interval& y = b.pieces()[j];
    const QuadScalar& lo = x.lo > y.lo ? x.lo : y.lo;
    const QuadScalar& hi = x.hi < y.hi ? x.hi : y.hi;
    if (lo <= hi) out.push_back(Interval{lo, hi});
    if (x.hi <= y.hi)
      ++i;
    else
      ++j;
  }
  return IntervalSet::normalize(std::move(out));
}

IntervalSet translate_set(const QuadScalar& s, const IntervalSet& a) {
  std::vector<Interval> out;
  out.reserve(a.pieces().size());
  for (const auto& iv : a.pieces()) out.push_back(Interval{s + iv.lo, s + iv.hi});
  return IntervalSet::normalize(std::move(out));
}

QuadScalar measure(const IntervalSet& a) {
  QuadScalar total;
  for (const auto& iv : a.pieces()) total += iv.length();
  return total;
}

RealSubsetCheck is_subset(const IntervalSet& a, const IntervalSet& b) {
  const auto& cover = b.pieces();
  for (const auto& iv : a.pieces()) {
    // Find the covering piece for iv.lo; if none, lo itself is the witness.
    std::size_t j = 0;
    while (j < cover.size() && cover[j].hi < iv.lo) ++j;
    if (j == cover.size() || cover[j].lo > iv.lo) return {false, iv.lo};
    // Covered up to cover[j].hi; any remainder of [lo,hi] is uncovered.
    if (cover[j].hi < iv.hi) {
      if (j + 1 < cover.size() && cover[j + 1].lo <= iv.hi)
        // Open gap between two covered stretches: midpoint is the witness.
        return {false, midpoint(cover[j].hi, cover[j + 1].lo)};
      return {false, iv.hi};  // (cover[j].hi, hi] uncovered
    }
  }
  return {true, std::nullopt};
}

RealSwellingVerdict check_swelling_real(const IntervalSet& a_set, const IntervalSet& b_set,
                                        const QuadScalar& a, const QuadScalar& b,
                                        const QuadScalar& c) {
  const IntervalSet ta = translate_set(a, a_set);
  const IntervalSet tb = translate_set(b, b_set);
  const IntervalSet uni = set_union(a_set, b_set);
  const IntervalSet tuni = set_union(ta, tb);
  const IntervalSet inter = set_intersection(a_set, b_set);
  const IntervalSet cab = translate_set(c, inter);
  const IntervalSet tinter = set_intersection(ta, tb);

  RealSwellingVerdict v;
  auto judge = [](const IntervalSet& lhs, const IntervalSet& rhs, bool& inclusion, bool& equality,
                  std::optional<QuadScalar>& witness) {
    auto fwd = is_subset(lhs, rhs);
    inclusion = fwd.holds;
    if (!inclusion) {
      equality = false;
      witness = fwd.witness;
      return;
    }
    auto back = is_subset(rhs, lhs);
    equality = back.holds;
    if (!equality) witness = back.witness;
  };
  judge(tuni, uni, v.union_inclusion, v.union_equality, v.union_witness);
  judge(tinter, cab, v.inter_inclusion, v.inter_equality, v.inter_witness);
  return v;
}

IntervalExample interval_example(const QuadScalar& u, const QuadScalar& v, const QuadScalar& w,
                                 const QuadScalar& t) {
  if (!(u < v && v < w && w < t))
    throw std::invalid_argument("interval example requires u < v < w < t");
  IntervalExample ex;
  ex.a_set = IntervalSet::single(u, w);
  ex.b_set = IntervalSet::single(v, t);
  ex.a = t - w;
  ex.b = u - v;
  // (a+A) n (b+B) = [u+t-w, u+t-v] is A n B = [v,w] shifted by u+t-v-w.
  ex.c = u + t - v - w;
  ex.verdict = check_swelling_real(ex.a_set, ex.b_set, ex.a, ex.b, ex.c);
  return ex;
}

QuotientCoverage quotient_project(const IntervalSet& a_set, const QuadScalar& b) {
  if (b.is_zero()) throw std::invalid_argument("quotient modulus must be nonzero");
  const QuadScalar m = qs_abs(b);
  QuotientCoverage out;
  out.modulus = m;
  std::vector<Interval> reduced;
  for (const auto& iv : a_set.pieces()) {
    if (iv.length() >= m) {
      out.covered = IntervalSet::single(QuadScalar{}, m);
      out.deficit = QuadScalar{};
      return out;
    }
    BigInt k = (iv.lo / m).floor();
    const QuadScalar shift = QuadScalar::of_rational(Rational(k)) * m;
    QuadScalar lo = iv.lo - shift;  // in [0, m)
    QuadScalar hi = iv.hi - shift;  // < lo + m < 2m
    if (hi <= m) {
      reduced.push_back(Interval{std::move(lo), std::move(hi)});
    } else {
      reduced.push_back(Interval{std::move(lo), m});
      reduced.push_back(Interval{QuadScalar{}, hi - m});
    }
  }
  out.covered = IntervalSet::normalize(std::move(reduced));
  out.deficit = m - measure(out.covered);
  return out;
}

CoverageFilter necessary_condition_filter(const IntervalSet& a_set, const IntervalSet& b_set,
                                          const QuadScalar& a, const QuadScalar& b) {
  if (a.is_zero() || b.is_zero())
    throw std::invalid_argument("coverage filter requires nonzero translations");
  CoverageFilter f;
  f.applicable = !(a / b).is_rational();
  f.deficit_a_mod_b = quotient_project(a_set, b).deficit;
  f.deficit_b_mod_a = quotient_project(b_set, a).deficit;
  f.passes = f.deficit_a_mod_b.is_zero() && f.deficit_b_mod_a.is_zero();
  return f;
}

IntervalSet parse_interval_set(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty() || s == "empty") return {};
  std::vector<Interval> raw;
  std::size_t pos = 0;
  for (;;) {
    if (pos >= s.size() || s[pos] != '[')
      throw std::invalid_argument("interval set: expected '['");
    std::size_t close = s.find(']', pos);
    if (close == std::string::npos) throw std::invalid_argument("interval set: missing ']'");
    std::string_view body(s.data() + pos + 1, close - pos - 1);
    std::size_t comma = body.find(',');
    if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos)
      throw std::invalid_argument("interval set: expected exactly one comma per interval");
    raw.push_back(
        Interval{parse_quad(body.substr(0, comma)), parse_quad(body.substr(comma + 1))});
    pos = close + 1;
    if (pos == s.size()) break;
    if (s[pos] != 'u') throw std::invalid_argument("interval set: expected 'u' between intervals");
    ++pos;
  }
  return IntervalSet::normalize(std::move(raw));
}

std::string format_interval_set(const IntervalSet& a) {
  if (a.empty()) return "empty";
  std::string out;
  for (std::size_t i = 0; i < a.pieces().size(); ++i) {
    if (i) out.push_back('u');
    out.push_back('[');
    out += format_quad_short(a.pieces()[i].lo);
    out.push_back(',');
    out += format_quad_short(a.pieces()[i].hi);
    out.push_back(']');
  }
  return out;
}

}  // namespace swelling
