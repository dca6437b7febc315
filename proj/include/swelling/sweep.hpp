#pragma once

#include "swelling/finite_set.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace swelling {

/// Dense model of a small finite group: elements indexed by their canonical
/// order, multiplication table, subsets as bitmasks. Backs the exhaustive
/// sweeps; the generic FiniteSubset path stays available for cross-checks.
struct DenseGroup {
  GroupDescriptor desc;
  std::vector<GroupElement> elements;
  std::vector<std::uint8_t> cayley;   // cayley[a*n + x] = index of a*x
  std::vector<std::uint8_t> inverse;  // index of x^-1

  std::size_t order() const { return elements.size(); }
  std::uint8_t mul(std::uint8_t a, std::uint8_t x) const { return cayley[a * order() + x]; }

  std::uint64_t translate_mask(std::uint8_t a, std::uint64_t mask) const;
  FiniteSubset mask_to_subset(std::uint64_t mask) const;

  /// Throws std::domain_error when the carrier is infinite or larger than 16.
  static DenseGroup build(const GroupDescriptor& g);
};

struct SweepOptions {
  int jobs = 1;
  bool audit_chains = false;       // run the cardinality-chain audit on every
                                   // tuple whose inclusions hold
  bool collect_satisfying = false; // keep packed encodings of those tuples
  std::size_t group_order_cap = 8;
};

// Packed tuple layout: a_mask | b_mask<<16 | a<<32 | b<<40 | c<<48.
std::uint64_t pack_tuple(std::uint64_t a_mask, std::uint64_t b_mask, std::uint8_t a,
                         std::uint8_t b, std::uint8_t c);

struct DecodedTuple {
  FiniteSubset set_a, set_b;
  GroupElement a, b, c;
};
DecodedTuple decode_packed_tuple(const DenseGroup& dg, std::uint64_t packed);

struct SweepViolation {
  std::uint64_t tuple_index = 0;
  std::uint64_t packed = 0;
  std::string kind;  // "equality-failure" or "chain-noncollapse"
};

struct SweepSummary {
  std::uint64_t tuples_checked = 0;
  std::uint64_t inclusions_satisfied = 0;
  std::uint64_t audits_run = 0;
  std::vector<SweepViolation> violations;
  std::vector<std::uint64_t> satisfying;  // only when collect_satisfying
};

/// Iterates ALL (A, B, a, b, c) in lexicographic index order and records every
/// tuple where the two translate inclusions hold but an equality fails. The
/// finite-set counting argument says the violation list must stay empty.
SweepSummary sweep_two_swelling(const GroupDescriptor& g, const SweepOptions& opts = {});

/// Disjointness variant over (A, B, a, b): aA n bB = {} and aA u bB <= A u B
/// must force aA u bB = A u B and A n B = {}.
SweepSummary sweep_weak_two_swelling(const GroupDescriptor& g, const SweepOptions& opts = {});

}  // namespace swelling
