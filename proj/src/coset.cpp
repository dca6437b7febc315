#include "swelling/coset.hpp"

#include <stdexcept>
#include <utility>

namespace swelling {

namespace {

// x and y share a right coset Hx iff x*y^-1 lies in H.
GroupElement coset_key(const GroupDescriptor& g, const GroupElement& x, const GroupElement& y) {
  return group_op(g, x, group_inv(g, y));
}

bool same_coset(const GroupDescriptor& g, const SubgroupDescriptor& h, const GroupElement& x,
                const GroupElement& y) {
  return h.contains(coset_key(g, x, y));
}

std::size_t count_in_coset(const GroupDescriptor& g, const SubgroupDescriptor& h,
                           const FiniteSubset& xs, const GroupElement& rep) {
  std::size_t n = 0;
  for (const auto& z : xs.elems())
    if (same_coset(g, h, z, rep)) ++n;
  return n;
}

FiniteSubset slice_coset(const GroupDescriptor& g, const SubgroupDescriptor& h,
                         const FiniteSubset& xs, const GroupElement& rep) {
  std::vector<GroupElement> kept;
  for (const auto& z : xs.elems())
    if (same_coset(g, h, z, rep)) kept.push_back(z);
  return FiniteSubset::of(g, std::move(kept));
}

// Representatives (least members) of the cosets meeting `pool`, in carrier order.
std::vector<GroupElement> coset_reps(const GroupDescriptor& g, const SubgroupDescriptor& h,
                                     const FiniteSubset& pool) {
  std::vector<GroupElement> reps;
  for (const auto& x : pool.elems()) {
    bool seen = false;
    for (const auto& r : reps)
      if (same_coset(g, h, x, r)) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back(x);
  }
  return reps;
}

void require_inclusions(const GroupDescriptor& g, const FiniteSubset& a_set,
                        const FiniteSubset& b_set, const GroupElement& a, const GroupElement& b,
                        const GroupElement& c) {
  auto verdict = check_swelling_pair(g, a_set, b_set, a, b, c);
  if (!verdict.union_inclusion || !verdict.inter_inclusion)
    throw std::invalid_argument("coset audit requires both translate inclusions to hold");
}

}  // namespace

std::size_t CosetPartition::max_class_size() const {
  std::size_t m = 0;
  for (const auto& [rep, members] : classes) m = std::max(m, members.size());
  return m;
}

CosetPartition coset_partition(const FiniteSubset& k_set, const SubgroupDescriptor& h) {
  const GroupDescriptor& g = h.ambient();
  CosetPartition part;
  std::vector<std::vector<GroupElement>> buckets;
  // K is iterated in carrier order, so the first member of each class is
  // its least element and becomes the representative.
  for (const auto& x : k_set.elems()) {
    bool placed = false;
    for (std::size_t i = 0; i < part.classes.size(); ++i)
      if (same_coset(g, h, x, part.classes[i].first)) {
        buckets[i].push_back(x);
        placed = true;
        break;
      }
    if (!placed) {
      part.classes.emplace_back(x, FiniteSubset{});
      buckets.emplace_back(std::vector<GroupElement>{x});
    }
  }
  for (std::size_t i = 0; i < part.classes.size(); ++i)
    part.classes[i].second = FiniteSubset::of(g, std::move(buckets[i]));
  return part;
}

CosetBoundReport check_coset_count_bound(const FiniteSubset& k_set, const SubgroupDescriptor& h) {
  const GroupDescriptor& g = h.ambient();
  CosetBoundReport report;
  report.max_coset_count = coset_partition(k_set, h).max_class_size();
  std::vector<GroupElement> diffs;
  for (const auto& k1 : k_set.elems())
    for (const auto& k2 : k_set.elems()) {
      GroupElement d = coset_key(g, k1, k2);
      if (h.contains(d)) diffs.push_back(std::move(d));
    }
  report.difference_bound = FiniteSubset::of(g, std::move(diffs)).size();
  report.holds = report.max_coset_count <= report.difference_bound;
  return report;
}

CosetCountReport audit_coset_chains(const GroupDescriptor& g, const FiniteSubset& a_set,
                                    const FiniteSubset& b_set, const GroupElement& a,
                                    const GroupElement& b, const GroupElement& c,
                                    std::size_t closure_cap) {
  require_inclusions(g, a_set, b_set, a, b, c);

  const FiniteSubset ta = translate(g, a, a_set);
  const FiniteSubset tb = translate(g, b, b_set);
  const FiniteSubset inter = set_intersection(a_set, b_set);
  const FiniteSubset cab = translate(g, c, inter);
  const FiniteSubset uni = set_union(a_set, b_set);
  const FiniteSubset tuni = set_union(ta, tb);
  const FiniteSubset tinter = set_intersection(ta, tb);

  auto h3 = SubgroupDescriptor::build(g, {a, b, c}, closure_cap);
  const FiniteSubset domain = set_union(set_union(uni, tuni), cab);

  CosetCountReport report;
  report.all_collapse = true;
  std::vector<GroupElement> union_pieces;
  std::vector<GroupElement> inter_pieces;
  for (const auto& rep : coset_reps(g, h3, domain)) {
    CosetCountRow row;
    row.coset_rep = rep;
    row.a_translate = count_in_coset(g, h3, ta, rep);
    row.b_translate = count_in_coset(g, h3, tb, rep);
    row.translate_inter = count_in_coset(g, h3, tinter, rep);
    row.a_count = count_in_coset(g, h3, a_set, rep);
    row.b_count = count_in_coset(g, h3, b_set, rep);
    row.inter_count = count_in_coset(g, h3, inter, rep);

    const FiniteSubset uni_piece = slice_coset(g, h3, uni, rep);
    const FiniteSubset tuni_piece = slice_coset(g, h3, tuni, rep);
    const FiniteSubset tinter_piece = slice_coset(g, h3, tinter, rep);
    const FiniteSubset cab_piece = slice_coset(g, h3, cab, rep);

    row.chain[0] = uni_piece.size();
    row.chain[1] = tuni_piece.size();
    row.chain[2] = row.a_translate + row.b_translate - row.translate_inter;
    row.chain[3] = row.a_count + row.b_count - cab_piece.size();
    row.chain[4] = row.chain[0];
    for (int i = 0; i < 4; ++i) row.links[i] = row.chain[i] == row.chain[i + 1] ? '=' : '>';
    row.collapsed = row.links[0] == '=' && row.links[1] == '=' && row.links[2] == '=' &&
                    row.links[3] == '=';
    row.union_sets_equal = uni_piece == tuni_piece;
    row.inter_sets_equal = tinter_piece == cab_piece;

    report.all_collapse =
        report.all_collapse && row.collapsed && row.union_sets_equal && row.inter_sets_equal;
    for (const auto& e : tuni_piece.elems()) union_pieces.push_back(e);
    for (const auto& e : tinter_piece.elems()) inter_pieces.push_back(e);
    report.rows.push_back(std::move(row));
  }
  report.reassembled_union = FiniteSubset::of(g, std::move(union_pieces));
  report.reassembled_inter = FiniteSubset::of(g, std::move(inter_pieces));
  return report;
}

InequalityChainReport audit_inequality_chains(const GroupDescriptor& g, const FiniteSubset& a_set,
                                              const FiniteSubset& b_set, const GroupElement& a,
                                              const GroupElement& b, const GroupElement& c,
                                              const SubgroupDescriptor& h2, ChainCase which) {
  if (!g.abelian())
    throw std::invalid_argument("inequality chain audit requires an abelian carrier");
  require_inclusions(g, a_set, b_set, a, b, c);
  const GroupElement* first = nullptr;
  const GroupElement* second = nullptr;
  switch (which) {
    case ChainCase::TranslateA: first = &b; second = &c; break;
    case ChainCase::TranslateB: first = &a; second = &c; break;
    case ChainCase::TranslateC: first = &a; second = &b; break;
  }
  if (!h2.contains(*first) || !h2.contains(*second))
    throw std::invalid_argument("the two designated elements must lie in the given subgroup");

  const FiniteSubset ta = translate(g, a, a_set);
  const FiniteSubset tb = translate(g, b, b_set);
  const FiniteSubset uni = set_union(a_set, b_set);
  const FiniteSubset tuni = set_union(ta, tb);
  const FiniteSubset inter = set_intersection(a_set, b_set);
  const FiniteSubset cab = translate(g, c, inter);

  InequalityChainReport report;
  report.which = which;
  auto emit = [&report](GroupElement rep, const char* label, std::size_t lhs, std::size_t rhs) {
    InequalityRow row;
    row.coset_rep = std::move(rep);
    row.label = label;
    row.lhs = lhs;
    row.rhs = rhs;
    row.strict = lhs < rhs;
    if (row.strict) ++report.strict_count;
    report.rows.push_back(std::move(row));
  };

  if (which == ChainCase::TranslateA || which == ChainCase::TranslateB) {
    // (2): |(aA u bB) n H2x| <= |(A u B) n H2x| on every coset meeting either.
    for (const auto& rep : coset_reps(g, h2, set_union(uni, tuni)))
      emit(rep, "(2)", count_in_coset(g, h2, tuni, rep), count_in_coset(g, h2, uni, rep));
    const bool a_case = which == ChainCase::TranslateA;
    const FiniteSubset& base = a_case ? a_set : b_set;
    const FiniteSubset& shifted = a_case ? ta : tb;
    const GroupElement& t = a_case ? a : b;
    // (x->a): |A n H2 a^-1 x| <= |A n H2x| (and the b-twin).
    for (const auto& rep : coset_reps(g, h2, set_union(base, shifted))) {
      GroupElement back = group_op(g, group_inv(g, t), rep);
      emit(rep, a_case ? "(x->a)" : "(x->b)", count_in_coset(g, h2, base, back),
           count_in_coset(g, h2, base, rep));
    }
  } else {
    const FiniteSubset tinter = set_intersection(ta, tb);
    for (const auto& rep : coset_reps(g, h2, set_union(inter, cab))) {
      // (eq:c): |(A n B) n H2x| <= |(aA n bB) n H2x| via a,b in H2.
      emit(rep, "(eq:c)", count_in_coset(g, h2, inter, rep),
           count_in_coset(g, h2, tinter, rep));
      // (x->cx): |(A n B) n H2x| <= |(A n B) n H2 c^-1 x|.
      GroupElement back = group_op(g, group_inv(g, c), rep);
      emit(rep, "(x->cx)", count_in_coset(g, h2, inter, rep),
           count_in_coset(g, h2, inter, back));
    }
  }
  return report;
}

}  // namespace swelling
