#pragma once

#include "swelling/finite_set.hpp"

#include <cstdint>
#include <vector>

namespace swelling {

// How membership in a finitely generated subgroup is decided. Picked per
// carrier when the descriptor is built:
//   - finite carriers enumerate the closure,
//   - Zn and QSqrt2 (viewed as Q^2 after clearing denominators) reduce the
//     generators to a staircase integer-lattice normal form,
//   - f.g. subgroups of Q are cyclic, so a single rational generator.
enum class MembershipForm { EnumeratedClosure, IntegerLattice, CyclicRational };

/// Staircase (Hermite) basis over the integers. Rows have strictly
/// increasing pivot columns, positive pivots, and entries above each pivot
/// reduced into [0, pivot). The subgroup is (1/scale) times their Z-span.
struct LatticeForm {
  std::size_t dim = 0;
  std::vector<std::vector<BigInt>> rows;
  BigInt scale = 1;

  bool contains(std::vector<BigInt> v) const;
};

class SubgroupDescriptor {
 public:
  /// Builds a membership oracle for the subgroup generated by `generators`.
  /// Throws std::length_error when an enumerated closure would exceed
  /// closure_cap, std::invalid_argument on carrier mismatch.
  static SubgroupDescriptor build(const GroupDescriptor& ambient,
                                  std::vector<GroupElement> generators,
                                  std::size_t closure_cap = 1'000'000);

  const GroupDescriptor& ambient() const { return ambient_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  MembershipForm form() const { return form_; }
  const FiniteSubset& closure() const { return closure_; }
  const LatticeForm& lattice() const { return lattice_; }
  const Rational& cyclic_generator() const { return cyclic_gen_; }

  /// Exact membership test; g must be in the ambient carrier.
  bool contains(const GroupElement& g) const;

 private:
  GroupDescriptor ambient_;
  std::vector<GroupElement> generators_;
  MembershipForm form_ = MembershipForm::EnumeratedClosure;
  FiniteSubset closure_;
  LatticeForm lattice_;
  Rational cyclic_gen_ = 0;
};

}  // namespace swelling
