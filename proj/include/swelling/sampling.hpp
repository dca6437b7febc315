#pragma once

#include "swelling/finite_set.hpp"

#include <random>

namespace swelling {

/// Deterministic helpers for randomized trials. Plain modulo reduction keeps
/// draws reproducible across platforms; the slight bias is irrelevant here.
inline std::uint64_t rand_below(std::mt19937_64& eng, std::uint64_t n) {
  return n == 0 ? 0 : eng() % n;
}

inline long rand_signed(std::mt19937_64& eng, long magnitude) {
  return static_cast<long>(rand_below(eng, 2 * static_cast<std::uint64_t>(magnitude) + 1)) -
         magnitude;
}

inline GroupElement random_element(const GroupDescriptor& g, std::mt19937_64& eng,
                                   long magnitude = 8) {
  switch (g.carrier) {
    case Carrier::CyclicMod:
      return CyclicElem{static_cast<std::uint32_t>(rand_below(eng, g.mod))};
    case Carrier::IntVector: {
      VecElem v;
      v.c.reserve(g.dim);
      for (std::uint32_t i = 0; i < g.dim; ++i) v.c.emplace_back(rand_signed(eng, magnitude));
      return v;
    }
    case Carrier::Perm3:
      return all_elements(g)[rand_below(eng, 6)];
    case Carrier::RationalAdd:
      return Rational(BigInt(rand_signed(eng, magnitude)),
                      BigInt(1 + rand_below(eng, static_cast<std::uint64_t>(magnitude))));
    case Carrier::QuadAdd:
      return QuadScalar{Rational(BigInt(rand_signed(eng, magnitude)),
                                 BigInt(1 + rand_below(eng, static_cast<std::uint64_t>(magnitude)))),
                        Rational(BigInt(rand_signed(eng, magnitude)),
                                 BigInt(1 + rand_below(eng, static_cast<std::uint64_t>(magnitude))))};
  }
  return group_id(g);
}

/// 1..max_size draws, deduplicated by the canonical set constructor.
inline FiniteSubset random_subset(const GroupDescriptor& g, std::mt19937_64& eng,
                                  std::size_t max_size, long magnitude = 8) {
  const std::size_t n = 1 + rand_below(eng, max_size);
  std::vector<GroupElement> elems;
  elems.reserve(n);
  for (std::size_t i = 0; i < n; ++i) elems.push_back(random_element(g, eng, magnitude));
  return FiniteSubset::of(g, std::move(elems));
}

inline std::vector<GroupElement> random_generators(const GroupDescriptor& g, std::mt19937_64& eng,
                                                   std::size_t max_gens, long magnitude = 8) {
  const std::size_t n = 1 + rand_below(eng, max_gens);
  std::vector<GroupElement> gens;
  gens.reserve(n);
  for (std::size_t i = 0; i < n; ++i) gens.push_back(random_element(g, eng, magnitude));
  return gens;
}

}  // namespace swelling
