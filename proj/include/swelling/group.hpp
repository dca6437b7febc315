#pragma once

#include "swelling/quad.hpp"
#include "swelling/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace swelling {

// Concrete carriers. Every one has decidable equality, a stable total
// order (used for canonical set representations) and a decidable word
// problem for the subgroup forms we build on top.
enum class Carrier { CyclicMod, IntVector, Perm3, RationalAdd, QuadAdd };

struct GroupDescriptor {
  Carrier carrier = Carrier::CyclicMod;
  std::uint32_t mod = 0;  // CyclicMod only
  std::uint32_t dim = 0;  // IntVector only

  bool abelian() const { return carrier != Carrier::Perm3; }
  bool finite() const {
    return carrier == Carrier::CyclicMod || carrier == Carrier::Perm3;
  }
  /// Order of a finite carrier; throws for infinite ones.
  std::size_t order() const;

  bool operator==(const GroupDescriptor&) const = default;
};

/// "Zmod:6", "Zn:2", "S3", "Q", "QSqrt2"
GroupDescriptor parse_group_spec(std::string_view text);
std::string format_group_spec(const GroupDescriptor& g);

struct CyclicElem {
  std::uint32_t r = 0;
  auto operator<=>(const CyclicElem&) const = default;
};

struct VecElem {
  std::vector<BigInt> c;
  bool operator==(const VecElem&) const = default;
};

/// Permutation of {1,2,3}; img[i] is the 0-based image of i+1.
struct PermElem {
  std::array<std::uint8_t, 3> img{0, 1, 2};
  auto operator<=>(const PermElem&) const = default;
};

using GroupElement = std::variant<CyclicElem, VecElem, PermElem, Rational, QuadScalar>;

/// Total order within one carrier; mixing carriers is a usage error.
int compare_elements(const GroupElement& a, const GroupElement& b);
bool element_less(const GroupElement& a, const GroupElement& b);
bool element_eq(const GroupElement& a, const GroupElement& b);

/// True iff g structurally belongs to G's carrier (residue in range,
/// vector of the right dimension, valid permutation).
bool element_in_carrier(const GroupDescriptor& g_desc, const GroupElement& g);

GroupElement group_id(const GroupDescriptor& g);
GroupElement group_op(const GroupDescriptor& g, const GroupElement& x, const GroupElement& y);
GroupElement group_inv(const GroupDescriptor& g, const GroupElement& x);

/// All elements of a finite carrier in canonical order.
std::vector<GroupElement> all_elements(const GroupDescriptor& g);

/// Element syntax per carrier: Zmod "4"; Zn "(2,-3)"; S3 "e", "(1 2)",
/// "(1 2 3)"; Q "1/2"; QSqrt2 "1/2+3/4*sqrt2".
GroupElement parse_element(const GroupDescriptor& g, std::string_view text);
std::string format_element(const GroupDescriptor& g, const GroupElement& e);

/// Splits on commas at parenthesis depth zero, then parses each item.
std::vector<GroupElement> parse_element_list(const GroupDescriptor& g, std::string_view text);

}  // namespace swelling
