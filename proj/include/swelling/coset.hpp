#pragma once

#include "swelling/subgroup.hpp"

#include <string>
#include <vector>

namespace swelling {

/// Right-coset partition of a finite set: x and y share a class iff
/// x*y^-1 lies in the subgroup. Representatives are the least members.
struct CosetPartition {
  std::vector<std::pair<GroupElement, FiniteSubset>> classes;  // rep -> members

  std::size_t max_class_size() const;
};

CosetPartition coset_partition(const FiniteSubset& k_set, const SubgroupDescriptor& h);

/// max_x |K n Hx| <= |K K^-1 n H|. The left side comes from the partition,
/// the right side from the difference set; `holds` must always be true.
struct CosetBoundReport {
  std::size_t max_coset_count = 0;
  std::size_t difference_bound = 0;
  bool holds = false;
};

CosetBoundReport check_coset_count_bound(const FiniteSubset& k_set, const SubgroupDescriptor& h);

/// Per-coset counting audit over the subgroup generated by {a, b, c}.
/// For each right coset Hx meeting A u B u aA u bB u c(A n B), evaluates
///   |(AuB) n Hx| >= |(aA u bB) n Hx|
///                 = |aA n Hx| + |bB n Hx| - |(aA n bB) n Hx|
///               >= |A n Hx| + |B n Hx| - |(A n B) n Hx| = |(AuB) n Hx|
/// plus the per-coset set equalities (AuB) n Hx = (aAubB) n Hx and
/// (aA n bB) n Hx = c(A n B) n Hx. All chains must collapse.
struct CosetCountRow {
  GroupElement coset_rep;
  std::size_t a_translate = 0;      // |aA n Hx|
  std::size_t b_translate = 0;      // |bB n Hx|
  std::size_t translate_inter = 0;  // |(aA n bB) n Hx|
  std::size_t a_count = 0;          // |A n Hx|
  std::size_t b_count = 0;          // |B n Hx|
  std::size_t inter_count = 0;      // |(A n B) n Hx|
  std::array<std::size_t, 5> chain{};
  std::array<char, 4> links{};
  bool collapsed = false;
  bool union_sets_equal = false;
  bool inter_sets_equal = false;
};

struct CosetCountReport {
  std::vector<CosetCountRow> rows;
  bool all_collapse = false;

  /// Union of the per-coset (aA u bB) n Hx pieces; comparing against A u B
  /// reproduces the global union equality.
  FiniteSubset reassembled_union;
  /// Union of the per-coset (aA n bB) n Hx pieces; comparing against
  /// c(A n B) reproduces the global intersection equality.
  FiniteSubset reassembled_inter;
};

/// Precondition: both translate inclusions hold (std::invalid_argument).
CosetCountReport audit_coset_chains(const GroupDescriptor& g, const FiniteSubset& a_set,
                                    const FiniteSubset& b_set, const GroupElement& a,
                                    const GroupElement& b, const GroupElement& c,
                                    std::size_t closure_cap = 1'000'000);

// Which of {a, b, c} is left outside the 2-generated subgroup H2.
enum class ChainCase { TranslateA, TranslateB, TranslateC };

/// One audited inequality on one coset; `strict` records lhs < rhs.
struct InequalityRow {
  GroupElement coset_rep;
  std::string label;  // "(2)", "(x->a)", "(x->b)", "(eq:c)", "(x->cx)"
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  bool strict = false;
};

struct InequalityChainReport {
  ChainCase which = ChainCase::TranslateA;
  std::vector<InequalityRow> rows;
  std::size_t strict_count = 0;
};

/// Audits the per-coset inequalities that follow from the inclusions when
/// the two designated elements lie in H2 (a-case: {b,c}; b-case: {a,c};
/// c-case: {a,b}). Abelian carriers only. In the discrete carriers here a
/// strict row can only come from an engine bug.
InequalityChainReport audit_inequality_chains(const GroupDescriptor& g, const FiniteSubset& a_set,
                                              const FiniteSubset& b_set, const GroupElement& a,
                                              const GroupElement& b, const GroupElement& c,
                                              const SubgroupDescriptor& h2, ChainCase which);

}  // namespace swelling
