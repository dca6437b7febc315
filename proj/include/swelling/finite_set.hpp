#pragma once

#include "swelling/group.hpp"

#include <array>
#include <optional>
#include <vector>

namespace swelling {

/// Finite subset of one carrier, kept sorted and duplicate-free.
/// Equality of subsets is equality of the canonical element sequences.
class FiniteSubset {
 public:
  FiniteSubset() = default;
  /// Normalizes (sorts, dedups) and rejects mixed carriers.
  static FiniteSubset of(const GroupDescriptor& g, std::vector<GroupElement> elems);

  const std::vector<GroupElement>& elems() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(const GroupElement& e) const;

  bool operator==(const FiniteSubset& o) const;

 private:
  // Precondition: already sorted and duplicate-free.
  static FiniteSubset from_sorted(std::vector<GroupElement> elems);
  friend FiniteSubset set_union(const FiniteSubset&, const FiniteSubset&);
  friend FiniteSubset set_intersection(const FiniteSubset&, const FiniteSubset&);
  friend FiniteSubset set_difference(const FiniteSubset&, const FiniteSubset&);

  std::vector<GroupElement> elems_;
};

FiniteSubset set_union(const FiniteSubset& a, const FiniteSubset& b);
FiniteSubset set_intersection(const FiniteSubset& a, const FiniteSubset& b);
FiniteSubset set_difference(const FiniteSubset& a, const FiniteSubset& b);

struct SubsetCheck {
  bool holds = false;
  std::optional<GroupElement> witness;  // least element of a \ b when !holds
};
SubsetCheck is_subset(const FiniteSubset& a, const FiniteSubset& b);

/// {a*x : x in A}. Left translation; preserves cardinality.
FiniteSubset translate(const GroupDescriptor& g, const GroupElement& a, const FiniteSubset& set);

/// Verdict on the four conditions for one (A, B, a, b, c) tuple:
/// aA u bB vs A u B and aA n bB vs c(A n B), inclusion and equality each.
/// A witness is stored per condition whenever equality fails: if the
/// inclusion itself fails it is the least element of the left side missing
/// from the right, otherwise (strict inclusion) the least element of the
/// right side missing from the left.
struct SwellingVerdict {
  bool union_inclusion = false;
  bool union_equality = false;
  bool inter_inclusion = false;
  bool inter_equality = false;
  std::optional<GroupElement> union_witness;
  std::optional<GroupElement> inter_witness;

  bool all_hold() const {
    return union_inclusion && union_equality && inter_inclusion && inter_equality;
  }
  /// Inclusions hold but some equality fails. For finite sets this is
  /// impossible (the cardinality chain forces equality), so a true value
  /// is a bug sentinel.
  bool inclusions_strict() const {
    return union_inclusion && inter_inclusion && !(union_equality && inter_equality);
  }
};

SwellingVerdict check_swelling_pair(const GroupDescriptor& g, const FiniteSubset& a_set,
                                    const FiniteSubset& b_set, const GroupElement& a,
                                    const GroupElement& b, const GroupElement& c);

/// The five-value cardinality chain
///   |AuB| >= |aA u bB| = |aA|+|bB|-|aA n bB| >= |A|+|B|-|c(A n B)| = |AuB|
/// evaluated on a tuple whose inclusions hold. Each link records whether it
/// realized "=" or ">"; the chain must collapse to all-equalities.
struct CardinalityChainReport {
  std::array<std::size_t, 5> values{};
  std::array<char, 4> links{};  // '=' or '>'
  bool chain_collapses = false;
};

/// Precondition: both inclusions hold (throws std::invalid_argument otherwise).
CardinalityChainReport audit_cardinality_chain(const GroupDescriptor& g, const FiniteSubset& a_set,
                                               const FiniteSubset& b_set, const GroupElement& a,
                                               const GroupElement& b, const GroupElement& c);

/// aA >= A forces aA = A on finite sets. Returns whether aA contains A;
/// when it does not, witness is the least element of A missing from aA.
struct SwellingLemmaCheck {
  bool superset_holds = false;
  bool equality_holds = false;
  std::optional<GroupElement> witness;
};
SwellingLemmaCheck check_swelling_lemma(const GroupDescriptor& g, const FiniteSubset& a_set,
                                        const GroupElement& a);

}  // namespace swelling
