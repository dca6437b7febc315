#include "swelling/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace swelling {

namespace {

// In-place staircase reduction of integer row vectors (row span preserved):
// integer elimination per column, positive pivots, entries above each pivot
// reduced mod the pivot. Zero rows are dropped.
void staircase_reduce(std::vector<std::vector<BigInt>>& rows, std::size_t dim) {
  std::size_t top = 0;
  for (std::size_t col = 0; col < dim && top < rows.size(); ++col) {
    for (;;) {
      // Row with the smallest nonzero |entry| in this column, at or below top.
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        if (best == rows.size() ||
            abs(rows[r][col]) < abs(rows[best][col]))
          best = r;
      }
      if (best == rows.size()) break;  // column already clear
      std::swap(rows[top], rows[best]);
      bool clean = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        BigInt q = rows[r][col] / rows[top][col];  // truncated is fine here
        for (std::size_t j = 0; j < dim; ++j) rows[r][j] -= q * rows[top][j];
        if (rows[r][col] != 0) clean = false;
      }
      if (clean) {
        if (rows[top][col] < 0)
          for (std::size_t j = 0; j < dim; ++j) rows[top][j] = -rows[top][j];
        // Reduce entries above the pivot into [0, pivot).
        for (std::size_t r = 0; r < top; ++r) {
          BigInt q = floor_div(rows[r][col], rows[top][col]);
          if (q != 0)
            for (std::size_t j = 0; j < dim; ++j) rows[r][j] -= q * rows[top][j];
        }
        ++top;
        break;
      }
    }
  }
  rows.resize(top);
}

LatticeForm lattice_from_int_rows(std::vector<std::vector<BigInt>> rows, std::size_t dim,
                                  BigInt scale) {
  // Drop all-zero generators up front.
  std::erase_if(rows, [](const std::vector<BigInt>& r) {
    return std::all_of(r.begin(), r.end(), [](const BigInt& x) { return x == 0; });
  });
  staircase_reduce(rows, dim);
  LatticeForm f;
  f.dim = dim;
  f.rows = std::move(rows);
  f.scale = std::move(scale);
  return f;
}

}  // namespace

bool LatticeForm::contains(std::vector<BigInt> v) const {
  std::size_t row = 0;
  for (std::size_t col = 0; col < dim; ++col) {
    const bool have_pivot = row < rows.size() && rows[row][col] != 0;
    if (!have_pivot) {
      if (v[col] != 0) return false;
      continue;
    }
    if (v[col] % rows[row][col] != 0) return false;
    BigInt q = v[col] / rows[row][col];
    if (q != 0)
      for (std::size_t j = col; j < dim; ++j) v[j] -= q * rows[row][j];
    ++row;
  }
  return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

SubgroupDescriptor SubgroupDescriptor::build(const GroupDescriptor& ambient,
                                             std::vector<GroupElement> generators,
                                             std::size_t closure_cap) {
  for (const auto& g : generators) {
    if (!element_in_carrier(ambient, g))
      throw std::invalid_argument("SubgroupDescriptor: generator outside the carrier");
  }
  SubgroupDescriptor h;
  h.ambient_ = ambient;
  h.generators_ = std::move(generators);

  switch (ambient.carrier) {
    case Carrier::CyclicMod:
    case Carrier::Perm3: {
      h.form_ = MembershipForm::EnumeratedClosure;
      // BFS over products with generators and inverses, capped.
      std::vector<GroupElement> seen{group_id(ambient)};
      std::vector<GroupElement> step = h.generators_;
      for (const auto& g : h.generators_) step.push_back(group_inv(ambient, g));
      auto sorted_contains = [&](const GroupElement& e) {
        return std::binary_search(seen.begin(), seen.end(), e, element_less);
      };
      std::deque<GroupElement> frontier(seen.begin(), seen.end());
      std::sort(seen.begin(), seen.end(), element_less);
      while (!frontier.empty()) {
        GroupElement cur = frontier.front();
        frontier.pop_front();
        for (const auto& s : step) {
          GroupElement nxt = group_op(ambient, cur, s);
          if (!sorted_contains(nxt)) {
            if (seen.size() >= closure_cap)
              throw std::length_error("SubgroupDescriptor: closure exceeds cap");
            seen.insert(std::upper_bound(seen.begin(), seen.end(), nxt, element_less), nxt);
            frontier.push_back(nxt);
          }
        }
      }
      h.closure_ = FiniteSubset::of(ambient, std::move(seen));
      break;
    }
    case Carrier::IntVector: {
      h.form_ = MembershipForm::IntegerLattice;
      std::vector<std::vector<BigInt>> rows;
      for (const auto& g : h.generators_) rows.push_back(std::get<VecElem>(g).c);
      h.lattice_ = lattice_from_int_rows(std::move(rows), ambient.dim, 1);
      break;
    }
    case Carrier::QuadAdd: {
      // Coordinates (rat, irr) make this Q^2; clear denominators so the
      // subgroup is (1/L) times an integer lattice.
      h.form_ = MembershipForm::IntegerLattice;
      BigInt lcm_all = 1;
      for (const auto& g : h.generators_) {
        const auto& q = std::get<QuadScalar>(g);
        lcm_all = big_lcm(lcm_all, denominator(q.rat));
        lcm_all = big_lcm(lcm_all, denominator(q.irr));
      }
      std::vector<std::vector<BigInt>> rows;
      for (const auto& g : h.generators_) {
        const auto& q = std::get<QuadScalar>(g);
        Rational x = q.rat * lcm_all, y = q.irr * lcm_all;
        rows.push_back({numerator(x), numerator(y)});
      }
      h.lattice_ = lattice_from_int_rows(std::move(rows), 2, lcm_all);
      break;
    }
    case Carrier::RationalAdd: {
      // The subgroup of Q generated by p_i/q_i is cyclic with generator
      // gcd(p_i * L / q_i) / L, L = lcm(q_i).
      h.form_ = MembershipForm::CyclicRational;
      BigInt lcm_all = 1;
      for (const auto& g : h.generators_)
        lcm_all = big_lcm(lcm_all, denominator(std::get<Rational>(g)));
      BigInt gcd_all = 0;
      for (const auto& g : h.generators_) {
        Rational scaled = std::get<Rational>(g) * lcm_all;
        gcd_all = big_gcd(gcd_all, numerator(scaled));
      }
      h.cyclic_gen_ = Rational(gcd_all, lcm_all);
      break;
    }
  }
  return h;
}

bool SubgroupDescriptor::contains(const GroupElement& g) const {
  if (!element_in_carrier(ambient_, g))
    throw std::invalid_argument("SubgroupDescriptor::contains: element outside the carrier");
  switch (form_) {
    case MembershipForm::EnumeratedClosure:
      return closure_.contains(g);
    case MembershipForm::IntegerLattice: {
      std::vector<BigInt> v;
      if (ambient_.carrier == Carrier::QuadAdd) {
        const auto& q = std::get<QuadScalar>(g);
        Rational x = q.rat * lattice_.scale, y = q.irr * lattice_.scale;
        if (denominator(x) != 1 || denominator(y) != 1) return false;
        v = {numerator(x), numerator(y)};
      } else {
        v = std::get<VecElem>(g).c;
      }
      return lattice_.contains(std::move(v));
    }
    case MembershipForm::CyclicRational: {
      const Rational& x = std::get<Rational>(g);
      if (cyclic_gen_ == 0) return x == 0;
      return denominator(Rational(x / cyclic_gen_)) == 1;
    }
  }
  return false;
}

}  // namespace swelling
