#pragma once

#include "swelling/quad.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace swelling {

/// Closed interval [lo, hi] with exact endpoints; lo <= hi, single points
/// allowed.
struct Interval {
  QuadScalar lo;
  QuadScalar hi;

  QuadScalar length() const { return hi - lo; }
  bool operator==(const Interval& o) const = default;
};

/// Compact subset of the line: canonical finite union of closed intervals.
/// Canonical means sorted, pairwise disjoint and non-touching (hi_i < lo_{i+1});
/// touching or overlapping pieces are merged on construction, so set equality
/// is sequence equality.
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Sorts and merges; throws std::invalid_argument when some lo > hi.
  static IntervalSet normalize(std::vector<Interval> raw);
  static IntervalSet single(QuadScalar lo, QuadScalar hi);

  const std::vector<Interval>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  bool contains(const QuadScalar& x) const;

  bool operator==(const IntervalSet& o) const { return pieces_ == o.pieces_; }

 private:
  std::vector<Interval> pieces_;
};

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b);
IntervalSet translate_set(const QuadScalar& s, const IntervalSet& a);

/// Total length: exact Lebesgue measure of the union.
QuadScalar measure(const IntervalSet& a);

/// Subset test with a deterministic witness when it fails: for the leftmost
/// uncovered region, an uncovered endpoint if one exists, otherwise the
/// midpoint of the (open) gap.
struct RealSubsetCheck {
  bool holds = false;
  std::optional<QuadScalar> witness;
};
RealSubsetCheck is_subset(const IntervalSet& a, const IntervalSet& b);

/// Same four conditions as the finite-set verdict, with witness points:
/// inclusion failure -> point of the left side missing from the right;
/// strict inclusion -> point of the right side missing from the left.
struct RealSwellingVerdict {
  bool union_inclusion = false;
  bool union_equality = false;
  bool inter_inclusion = false;
  bool inter_equality = false;
  std::optional<QuadScalar> union_witness;
  std::optional<QuadScalar> inter_witness;

  bool all_hold() const {
    return union_inclusion && union_equality && inter_inclusion && inter_equality;
  }
};

RealSwellingVerdict check_swelling_real(const IntervalSet& a_set, const IntervalSet& b_set,
                                        const QuadScalar& a, const QuadScalar& b,
                                        const QuadScalar& c);

/// A = [u,w], B = [v,t], a = t-w, b = u-v, c = v+w-u-t; for any u < v < w < t
/// the verdict is all-true (the two-interval family realizing the equalities).
struct IntervalExample {
  IntervalSet a_set;
  IntervalSet b_set;
  QuadScalar a;
  QuadScalar b;
  QuadScalar c;
  RealSwellingVerdict verdict;
};

/// Throws std::invalid_argument unless u < v < w < t.
IntervalExample interval_example(const QuadScalar& u, const QuadScalar& v, const QuadScalar& w,
                                 const QuadScalar& t);

/// Image of A in R/|b|Z, drawn on the fundamental domain [0, |b|]. The two
/// endpoints are identified; since a point has measure zero the deficit is
/// insensitive to that identification.
struct QuotientCoverage {
  QuadScalar modulus;
  IntervalSet covered;
  QuadScalar deficit;  // modulus - measure(covered), >= 0

  bool full() const { return deficit.is_zero(); }
};

/// Throws std::invalid_argument when b == 0.
QuotientCoverage quotient_project(const IntervalSet& a_set, const QuadScalar& b);

/// Contrapositive pruning: a tuple whose translates stay inside A u B must
/// have A + bZ = R = B + aZ, so a positive projection deficit certifies the
/// candidate non-viable. Only applicable when a/b is irrational.
struct CoverageFilter {
  bool applicable = false;  // false when a/b is rational
  bool passes = false;      // both deficits zero
  QuadScalar deficit_a_mod_b;
  QuadScalar deficit_b_mod_a;
};

/// Throws std::invalid_argument when a == 0 or b == 0.
CoverageFilter necessary_condition_filter(const IntervalSet& a_set, const IntervalSet& b_set,
                                          const QuadScalar& a, const QuadScalar& b);

/// Text syntax: "[0,1]u[3/2,2+1*sqrt2]"; "empty" (or "") for the empty set.
IntervalSet parse_interval_set(std::string_view text);
std::string format_interval_set(const IntervalSet& a);

}  // namespace swelling
