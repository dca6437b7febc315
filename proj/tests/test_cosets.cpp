#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "swelling/coset.hpp"
#include "swelling/sampling.hpp"

#include <random>

using namespace swelling;

namespace {

FiniteSubset subset_of(const GroupDescriptor& g, std::string_view text) {
  return FiniteSubset::of(g, parse_element_list(g, text));
}

SubgroupDescriptor subgroup_of(const GroupDescriptor& g, std::string_view gens) {
  return SubgroupDescriptor::build(g, parse_element_list(g, gens));
}

}  // namespace

TEST_CASE("subgroup membership across carriers") {
  const GroupDescriptor z = parse_group_spec("Zn:1");
  const auto two_z = subgroup_of(z, "2");
  CHECK(two_z.contains(parse_element(z, "(-4)")));
  CHECK_FALSE(two_z.contains(parse_element(z, "(3)")));

  const GroupDescriptor z2 = parse_group_spec("Zn:2");
  const auto lat = subgroup_of(z2, "(2,0),(1,3)");
  CHECK(lat.contains(parse_element(z2, "(3,3)")));
  CHECK(lat.contains(parse_element(z2, "(0,6)")));   // 2*(1,3) - (2,0)
  CHECK_FALSE(lat.contains(parse_element(z2, "(0,1)")));

  const GroupDescriptor q = parse_group_spec("Q");
  const auto h = subgroup_of(q, "1/6, 1/4");  // generates (1/12)Z
  CHECK(h.contains(GroupElement(Rational(5, 12))));
  CHECK_FALSE(h.contains(GroupElement(Rational(1, 8))));

  const GroupDescriptor s3 = parse_group_spec("S3");
  const auto a3 = subgroup_of(s3, "(1 2 3)");
  CHECK(a3.closure().size() == 3);
  CHECK_FALSE(a3.contains(parse_element(s3, "(1 2)")));

  const GroupDescriptor qs = parse_group_spec("QSqrt2");
  const auto m = subgroup_of(qs, "1, sqrt2");  // Z + Z*sqrt2
  CHECK(m.contains(GroupElement(parse_quad("3-2*sqrt2"))));
  CHECK_FALSE(m.contains(GroupElement(parse_quad("1/2"))));
}

TEST_CASE("subgroup membership matches naive word search on random samples") {
  // Oracle: breadth-first closure of sums/differences of the generators out
  // to a fixed depth; everything reached must be a member.
  std::mt19937_64 eng(41);
  for (const char* spec : {"Zn:1", "Zn:2", "Q", "QSqrt2", "Zmod:12"}) {
    const GroupDescriptor g = parse_group_spec(spec);
    for (int trial = 0; trial < 30; ++trial) {
      const auto gens = random_generators(g, eng, 2, 5);
      const auto h = SubgroupDescriptor::build(g, gens);
      std::vector<GroupElement> frontier{group_id(g)};
      for (int depth = 0; depth < 3; ++depth) {
        std::vector<GroupElement> next = frontier;
        for (const auto& w : frontier)
          for (const auto& gen : gens) {
            next.push_back(group_op(g, w, gen));
            next.push_back(group_op(g, w, group_inv(g, gen)));
          }
        frontier = std::move(next);
      }
      for (const auto& w : frontier) CHECK(h.contains(w));
    }
  }
}

TEST_CASE("coset partition is an equivalence partition") {
  std::mt19937_64 eng(42);
  for (const char* spec : {"Zmod:12", "Zn:2", "S3", "Q"}) {
    const GroupDescriptor g = parse_group_spec(spec);
    for (int trial = 0; trial < 50; ++trial) {
      const FiniteSubset k = random_subset(g, eng, 12, 6);
      const auto h = SubgroupDescriptor::build(g, random_generators(g, eng, 2, 4));
      const CosetPartition part = coset_partition(k, h);

      std::size_t total = 0;
      for (const auto& [rep, members] : part.classes) {
        total += members.size();
        CHECK(members.contains(rep));
        CHECK(element_eq(rep, members.elems().front()));  // least member
        for (const auto& x : members.elems()) {
          CHECK(k.contains(x));
          // same class iff x * rep^-1 in H
          CHECK(h.contains(group_op(g, x, group_inv(g, rep))));
        }
      }
      CHECK(total == k.size());  // classes cover K without overlap

      // cross-class pairs must not be H-related
      for (std::size_t i = 0; i < part.classes.size(); ++i)
        for (std::size_t j = i + 1; j < part.classes.size(); ++j)
          CHECK_FALSE(h.contains(group_op(g, part.classes[i].first,
                                          group_inv(g, part.classes[j].first))));
    }
  }
}

TEST_CASE("coset count bound: worked example") {
  const GroupDescriptor z = parse_group_spec("Zn:1");
  const CosetBoundReport r =
      check_coset_count_bound(subset_of(z, "0,1,2,4"), subgroup_of(z, "2"));
  CHECK(r.max_coset_count == 3);
  CHECK(r.difference_bound == 5);
  CHECK(r.holds);
}

TEST_CASE("coset count bound holds on randomized trials") {
  std::mt19937_64 eng(43);
  for (const char* spec : {"Zn:1", "Zn:2", "Zmod:6", "S3", "Q"}) {
    const GroupDescriptor g = parse_group_spec(spec);
    for (int trial = 0; trial < 500; ++trial) {
      const FiniteSubset k = random_subset(g, eng, 16, 8);
      const auto h = SubgroupDescriptor::build(g, random_generators(g, eng, 2, 5));
      const CosetBoundReport r = check_coset_count_bound(k, h);
      CHECK(r.holds);
      CHECK(r.max_coset_count == coset_partition(k, h).max_class_size());
    }
  }
}

TEST_CASE("per-coset chain audit: integer example") {
  const GroupDescriptor z = parse_group_spec("Zn:1");
  const CosetCountReport r = audit_coset_chains(
      z, subset_of(z, "0,2"), subset_of(z, "2,4"), parse_element(z, "2"),
      parse_element(z, "-2"), parse_element(z, "0"));
  REQUIRE(r.rows.size() == 1);  // everything lives in the even coset
  CHECK(r.all_collapse);
  CHECK(r.rows[0].chain == std::array<std::size_t, 5>{3, 3, 3, 3, 3});
  CHECK(r.rows[0].union_sets_equal);
  CHECK(r.rows[0].inter_sets_equal);
  CHECK(r.reassembled_union == subset_of(z, "0,2,4"));
  CHECK(r.reassembled_inter == subset_of(z, "2"));
}

TEST_CASE("per-coset chain audit: rational example with two cosets") {
  const GroupDescriptor q = parse_group_spec("Q");
  // A = {0, 1/2, 1}, B = {1/2, 1, 3/2}, a = 1/2, b = -1/2, c = 0.
  // H3 = <1/2> = (1/2)Z gives a single coset; shifting B by 1/4 splits it.
  const CosetCountReport one = audit_coset_chains(
      q, subset_of(q, "0,1/2,1"), subset_of(q, "1/2,1,3/2"), GroupElement(Rational(1, 2)),
      GroupElement(Rational(-1, 2)), GroupElement(Rational(0)));
  CHECK(one.all_collapse);
  CHECK(one.reassembled_union == subset_of(q, "0,1/2,1,3/2"));

  const CosetCountReport two = audit_coset_chains(
      q, subset_of(q, "0,1,1/3,4/3"), subset_of(q, "1,2,4/3,7/3"), GroupElement(Rational(1)),
      GroupElement(Rational(-1)), GroupElement(Rational(0)));
  REQUIRE(two.rows.size() == 2);  // integer coset and the 1/3-shifted coset
  CHECK(two.all_collapse);
  CHECK(two.reassembled_union == subset_of(q, "0,1,2,1/3,4/3,7/3"));
  CHECK(two.reassembled_inter == subset_of(q, "1,4/3"));
  for (const auto& row : two.rows) {
    CHECK(row.chain == std::array<std::size_t, 5>{3, 3, 3, 3, 3});
    CHECK(row.union_sets_equal);
    CHECK(row.inter_sets_equal);
  }
}

TEST_CASE("chain audit requires the inclusions") {
  const GroupDescriptor z = parse_group_spec("Zn:1");
  CHECK_THROWS_AS(audit_coset_chains(z, subset_of(z, "0"), subset_of(z, "0"),
                                     parse_element(z, "1"), parse_element(z, "0"),
                                     parse_element(z, "0")),
                  std::invalid_argument);
}

TEST_CASE("chain audit on random satisfying tuples always collapses") {
  std::mt19937_64 eng(44);
  for (const char* spec : {"Zmod:6", "Zmod:8", "S3"}) {
    const GroupDescriptor g = parse_group_spec(spec);
    int audited = 0;
    while (audited < 100) {
      const FiniteSubset a_set = random_subset(g, eng, 5, 0);
      const FiniteSubset b_set = random_subset(g, eng, 5, 0);
      const GroupElement a = random_element(g, eng, 0), b = random_element(g, eng, 0),
                         c = random_element(g, eng, 0);
      const SwellingVerdict v = check_swelling_pair(g, a_set, b_set, a, b, c);
      if (!(v.union_inclusion && v.inter_inclusion)) continue;
      ++audited;
      const CosetCountReport r = audit_coset_chains(g, a_set, b_set, a, b, c);
      CHECK(r.all_collapse);
      CHECK(r.reassembled_union == set_union(a_set, b_set));
      CHECK(r.reassembled_inter ==
            translate(g, c, set_intersection(a_set, b_set)));
    }
  }
}

TEST_CASE("inequality chains: worked integer example, all three cases") {
  const GroupDescriptor z = parse_group_spec("Zn:1");
  const FiniteSubset a_set = subset_of(z, "0,2"), b_set = subset_of(z, "2,4");
  const GroupElement a = parse_element(z, "2"), b = parse_element(z, "-2"),
                     c = parse_element(z, "0");
  {
    const auto r = audit_inequality_chains(z, a_set, b_set, a, b, c,
                                           subgroup_of(z, "-2,0"), ChainCase::TranslateA);
    CHECK(r.strict_count == 0);
    for (const auto& row : r.rows) CHECK(row.lhs <= row.rhs);
  }
  {
    const auto r = audit_inequality_chains(z, a_set, b_set, a, b, c,
                                           subgroup_of(z, "2,0"), ChainCase::TranslateB);
    CHECK(r.strict_count == 0);
  }
  {
    const auto r = audit_inequality_chains(z, a_set, b_set, a, b, c,
                                           subgroup_of(z, "2,-2"), ChainCase::TranslateC);
    CHECK(r.strict_count == 0);
    bool saw_eq_c = false;
    for (const auto& row : r.rows) saw_eq_c = saw_eq_c || row.label == "(eq:c)";
    CHECK(saw_eq_c);
  }
}

TEST_CASE("inequality chains enforce their preconditions") {
  const GroupDescriptor s3 = parse_group_spec("S3");
  CHECK_THROWS_AS(audit_inequality_chains(s3, subset_of(s3, "e"), subset_of(s3, "e"),
                                          parse_element(s3, "e"), parse_element(s3, "e"),
                                          parse_element(s3, "e"), subgroup_of(s3, "e"),
                                          ChainCase::TranslateA),
                  std::invalid_argument);  // nonabelian carrier

  const GroupDescriptor z = parse_group_spec("Zn:1");
  // a-case needs {b, c} inside H2, but b = -2 is not in <4>.
  CHECK_THROWS_AS(audit_inequality_chains(z, subset_of(z, "0,2"), subset_of(z, "2,4"),
                                          parse_element(z, "2"), parse_element(z, "-2"),
                                          parse_element(z, "0"), subgroup_of(z, "4"),
                                          ChainCase::TranslateA),
                  std::invalid_argument);
}

TEST_CASE("inequality chains never go strict on random satisfying tuples") {
  std::mt19937_64 eng(45);
  const GroupDescriptor g = parse_group_spec("Zmod:8");
  int audited = 0;
  while (audited < 100) {
    const FiniteSubset a_set = random_subset(g, eng, 5, 0);
    const FiniteSubset b_set = random_subset(g, eng, 5, 0);
    const GroupElement a = random_element(g, eng, 0), b = random_element(g, eng, 0),
                       c = random_element(g, eng, 0);
    const SwellingVerdict v = check_swelling_pair(g, a_set, b_set, a, b, c);
    if (!(v.union_inclusion && v.inter_inclusion)) continue;
    ++audited;
    const auto h2_bc = SubgroupDescriptor::build(g, {b, c});
    const auto h2_ac = SubgroupDescriptor::build(g, {a, c});
    const auto h2_ab = SubgroupDescriptor::build(g, {a, b});
    CHECK(audit_inequality_chains(g, a_set, b_set, a, b, c, h2_bc, ChainCase::TranslateA)
              .strict_count == 0);
    CHECK(audit_inequality_chains(g, a_set, b_set, a, b, c, h2_ac, ChainCase::TranslateB)
              .strict_count == 0);
    CHECK(audit_inequality_chains(g, a_set, b_set, a, b, c, h2_ab, ChainCase::TranslateC)
              .strict_count == 0);
  }
}
