#include "swelling/finite_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace swelling {

FiniteSubset FiniteSubset::of(const GroupDescriptor& g, std::vector<GroupElement> elems) {
  for (const auto& e : elems) {
    if (!element_in_carrier(g, e))
      throw std::invalid_argument("FiniteSubset: element outside the group's carrier");
  }
  std::sort(elems.begin(), elems.end(), element_less);
  elems.erase(std::unique(elems.begin(), elems.end(), element_eq), elems.end());
  FiniteSubset out;
  out.elems_ = std::move(elems);
  return out;
}

bool FiniteSubset::contains(const GroupElement& e) const {
  return std::binary_search(elems_.begin(), elems_.end(), e, element_less);
}

bool FiniteSubset::operator==(const FiniteSubset& o) const {
  if (elems_.size() != o.elems_.size()) return false;
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (!element_eq(elems_[i], o.elems_[i])) return false;
  return true;
}

FiniteSubset FiniteSubset::from_sorted(std::vector<GroupElement> elems) {
  FiniteSubset out;
  out.elems_ = std::move(elems);
  return out;
}

FiniteSubset set_union(const FiniteSubset& a, const FiniteSubset& b) {
  std::vector<GroupElement> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.elems().begin(), a.elems().end(), b.elems().begin(), b.elems().end(),
                 std::back_inserter(out), element_less);
  return FiniteSubset::from_sorted(std::move(out));
}

FiniteSubset set_intersection(const FiniteSubset& a, const FiniteSubset& b) {
  std::vector<GroupElement> out;
  std::set_intersection(a.elems().begin(), a.elems().end(), b.elems().begin(), b.elems().end(),
                        std::back_inserter(out), element_less);
  return FiniteSubset::from_sorted(std::move(out));
}

FiniteSubset set_difference(const FiniteSubset& a, const FiniteSubset& b) {
  std::vector<GroupElement> out;
  std::set_difference(a.elems().begin(), a.elems().end(), b.elems().begin(), b.elems().end(),
                      std::back_inserter(out), element_less);
  return FiniteSubset::from_sorted(std::move(out));
}

SubsetCheck is_subset(const FiniteSubset& a, const FiniteSubset& b) {
  FiniteSubset diff = set_difference(a, b);
  if (diff.empty()) return {true, std::nullopt};
  return {false, diff.elems().front()};
}

FiniteSubset translate(const GroupDescriptor& g, const GroupElement& a, const FiniteSubset& set) {
  std::vector<GroupElement> out;
  out.reserve(set.size());
  for (const auto& x : set.elems()) out.push_back(group_op(g, a, x));
  return FiniteSubset::of(g, std::move(out));
}

SwellingVerdict check_swelling_pair(const GroupDescriptor& g, const FiniteSubset& a_set,
                                    const FiniteSubset& b_set, const GroupElement& a,
                                    const GroupElement& b, const GroupElement& c) {
  FiniteSubset aa = translate(g, a, a_set);
  FiniteSubset bb = translate(g, b, b_set);
  FiniteSubset lhs_union = set_union(aa, bb);
  FiniteSubset rhs_union = set_union(a_set, b_set);
  FiniteSubset lhs_inter = set_intersection(aa, bb);
  FiniteSubset rhs_inter = translate(g, c, set_intersection(a_set, b_set));

  SwellingVerdict v;
  auto judge = [](const FiniteSubset& lhs, const FiniteSubset& rhs, bool& incl, bool& eq,
                  std::optional<GroupElement>& witness) {
    SubsetCheck fwd = is_subset(lhs, rhs);
    incl = fwd.holds;
    eq = fwd.holds && lhs.size() == rhs.size();
    if (!incl) {
      witness = fwd.witness;  // element of lhs escaping rhs
    } else if (!eq) {
      witness = set_difference(rhs, lhs).elems().front();  // strictness witness
    }
  };
  judge(lhs_union, rhs_union, v.union_inclusion, v.union_equality, v.union_witness);
  judge(lhs_inter, rhs_inter, v.inter_inclusion, v.inter_equality, v.inter_witness);
  return v;
}

CardinalityChainReport audit_cardinality_chain(const GroupDescriptor& g, const FiniteSubset& a_set,
                                               const FiniteSubset& b_set, const GroupElement& a,
                                               const GroupElement& b, const GroupElement& c) {
  SwellingVerdict v = check_swelling_pair(g, a_set, b_set, a, b, c);
  if (!v.union_inclusion || !v.inter_inclusion)
    throw std::invalid_argument("audit_cardinality_chain: the translate inclusions do not hold");

  FiniteSubset aa = translate(g, a, a_set);
  FiniteSubset bb = translate(g, b, b_set);
  CardinalityChainReport r;
  r.values[0] = set_union(a_set, b_set).size();
  r.values[1] = set_union(aa, bb).size();
  r.values[2] = aa.size() + bb.size() - set_intersection(aa, bb).size();
  r.values[3] =
      a_set.size() + b_set.size() - translate(g, c, set_intersection(a_set, b_set)).size();
  r.values[4] = r.values[0];
  for (int i = 0; i < 4; ++i) r.links[i] = r.values[i] == r.values[i + 1] ? '=' : '>';
  r.chain_collapses =
      r.links[0] == '=' && r.links[1] == '=' && r.links[2] == '=' && r.links[3] == '=';
  return r;
}

SwellingLemmaCheck check_swelling_lemma(const GroupDescriptor& g, const FiniteSubset& a_set,
                                        const GroupElement& a) {
  FiniteSubset aa = translate(g, a, a_set);
  SwellingLemmaCheck out;
  SubsetCheck sup = is_subset(a_set, aa);  // aA contains A?
  out.superset_holds = sup.holds;
  if (sup.holds) {
    out.equality_holds = aa == a_set;  // forced: |aA| = |A|
  } else {
    out.witness = sup.witness;  // element of A missing from aA
  }
  return out;
}

}  // namespace swelling
