#include "swelling/sweep.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>

namespace swelling {

std::uint64_t DenseGroup::translate_mask(std::uint8_t a, std::uint64_t mask) const {
  std::uint64_t out = 0;
  const std::uint8_t* row = cayley.data() + a * order();
  while (mask) {
    int i = std::countr_zero(mask);
    out |= std::uint64_t{1} << row[i];
    mask &= mask - 1;
  }
  return out;
}

FiniteSubset DenseGroup::mask_to_subset(std::uint64_t mask) const {
  std::vector<GroupElement> elems;
  while (mask) {
    int i = std::countr_zero(mask);
    elems.push_back(elements[i]);
    mask &= mask - 1;
  }
  return FiniteSubset::of(desc, std::move(elems));
}

DenseGroup DenseGroup::build(const GroupDescriptor& g) {
  if (!g.finite()) throw std::domain_error("DenseGroup: infinite carrier");
  DenseGroup dg;
  dg.desc = g;
  dg.elements = all_elements(g);  // canonical (sorted) order
  std::size_t n = dg.elements.size();
  if (n > 16) throw std::domain_error("DenseGroup: group too large for mask sweeps");
  auto index_of = [&](const GroupElement& e) -> std::uint8_t {
    auto it = std::lower_bound(dg.elements.begin(), dg.elements.end(), e, element_less);
    return static_cast<std::uint8_t>(it - dg.elements.begin());
  };
  dg.cayley.resize(n * n);
  dg.inverse.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t x = 0; x < n; ++x)
      dg.cayley[a * n + x] = index_of(group_op(g, dg.elements[a], dg.elements[x]));
    dg.inverse[a] = index_of(group_inv(g, dg.elements[a]));
  }
  return dg;
}

std::uint64_t pack_tuple(std::uint64_t a_mask, std::uint64_t b_mask, std::uint8_t a,
                         std::uint8_t b, std::uint8_t c) {
  return a_mask | (b_mask << 16) | (std::uint64_t{a} << 32) | (std::uint64_t{b} << 40) |
         (std::uint64_t{c} << 48);
}

DecodedTuple decode_packed_tuple(const DenseGroup& dg, std::uint64_t packed) {
  DecodedTuple t;
  t.set_a = dg.mask_to_subset(packed & 0xffff);
  t.set_b = dg.mask_to_subset((packed >> 16) & 0xffff);
  t.a = dg.elements[(packed >> 32) & 0xff];
  t.b = dg.elements[(packed >> 40) & 0xff];
  t.c = dg.elements[(packed >> 48) & 0xff];
  return t;
}

namespace {

struct WorkerResult {
  std::uint64_t inclusions_satisfied = 0;
  std::uint64_t audits_run = 0;
  std::vector<SweepViolation> violations;
  std::vector<std::uint64_t> satisfying;
};

// Tuple index radix (lexicographic in A, B, a, b, c): index =
// (((A*2^n + B)*n + a)*n + b)*n + c, with the c digit absent for the weak
// sweep. Workers own contiguous index ranges, so concatenating their
// results in worker order preserves index order.
template <typename Body>
SweepSummary run_partitioned(std::uint64_t total, int jobs, Body body) {
  jobs = std::max(1, jobs);
  std::uint64_t nworkers = std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(total, 1));
  std::vector<WorkerResult> results(nworkers);
  std::vector<std::thread> threads;
  std::uint64_t chunk = total / nworkers, rem = total % nworkers;
  std::uint64_t start = 0;
  for (std::uint64_t w = 0; w < nworkers; ++w) {
    std::uint64_t len = chunk + (w < rem ? 1 : 0);
    threads.emplace_back(body, start, start + len, std::ref(results[w]));
    start += len;
  }
  for (auto& t : threads) t.join();

  SweepSummary summary;
  summary.tuples_checked = total;
  for (auto& r : results) {
    summary.inclusions_satisfied += r.inclusions_satisfied;
    summary.audits_run += r.audits_run;
    summary.violations.insert(summary.violations.end(), r.violations.begin(), r.violations.end());
    summary.satisfying.insert(summary.satisfying.end(), r.satisfying.begin(), r.satisfying.end());
  }
  return summary;
}

void check_cap(const DenseGroup& dg, const SweepOptions& opts) {
  if (dg.order() > opts.group_order_cap)
    throw std::length_error("sweep: group order " + std::to_string(dg.order()) +
                            " exceeds cap " + std::to_string(opts.group_order_cap));
}

}  // namespace

SweepSummary sweep_two_swelling(const GroupDescriptor& g, const SweepOptions& opts) {
  DenseGroup dg = DenseGroup::build(g);
  check_cap(dg, opts);
  const std::uint64_t n = dg.order();
  const std::uint64_t nmasks = std::uint64_t{1} << n;
  const std::uint64_t total = nmasks * nmasks * n * n * n;

  auto body = [&](std::uint64_t lo, std::uint64_t hi, WorkerResult& res) {
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::uint64_t rest = idx;
      const std::uint8_t c = static_cast<std::uint8_t>(rest % n); rest /= n;
      const std::uint8_t b = static_cast<std::uint8_t>(rest % n); rest /= n;
      const std::uint8_t a = static_cast<std::uint8_t>(rest % n); rest /= n;
      const std::uint64_t b_mask = rest % nmasks; rest /= nmasks;
      const std::uint64_t a_mask = rest;

      const std::uint64_t ta = dg.translate_mask(a, a_mask);
      const std::uint64_t tb = dg.translate_mask(b, b_mask);
      const std::uint64_t rhs_union = a_mask | b_mask;
      const std::uint64_t lhs_union = ta | tb;
      if (lhs_union & ~rhs_union) continue;  // union inclusion fails
      const std::uint64_t lhs_inter = ta & tb;
      const std::uint64_t rhs_inter = dg.translate_mask(c, a_mask & b_mask);
      if (lhs_inter & ~rhs_inter) continue;  // intersection inclusion fails

      ++res.inclusions_satisfied;
      if (opts.collect_satisfying) res.satisfying.push_back(pack_tuple(a_mask, b_mask, a, b, c));
      if (lhs_union != rhs_union || lhs_inter != rhs_inter)
        res.violations.push_back({idx, pack_tuple(a_mask, b_mask, a, b, c), "equality-failure"});
      if (opts.audit_chains) {
        ++res.audits_run;
        const std::uint64_t v0 = std::popcount(rhs_union);
        const std::uint64_t v1 = std::popcount(lhs_union);
        const std::uint64_t v2 = std::popcount(ta) + std::popcount(tb) - std::popcount(lhs_inter);
        const std::uint64_t v3 =
            std::popcount(a_mask) + std::popcount(b_mask) - std::popcount(rhs_inter);
        if (!(v0 == v1 && v1 == v2 && v2 == v3))
          res.violations.push_back({idx, pack_tuple(a_mask, b_mask, a, b, c), "chain-noncollapse"});
      }
    }
  };
  return run_partitioned(total, opts.jobs, body);
}

SweepSummary sweep_weak_two_swelling(const GroupDescriptor& g, const SweepOptions& opts) {
  DenseGroup dg = DenseGroup::build(g);
  check_cap(dg, opts);
  const std::uint64_t n = dg.order();
  const std::uint64_t nmasks = std::uint64_t{1} << n;
  const std::uint64_t total = nmasks * nmasks * n * n;

  auto body = [&](std::uint64_t lo, std::uint64_t hi, WorkerResult& res) {
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::uint64_t rest = idx;
      const std::uint8_t b = static_cast<std::uint8_t>(rest % n); rest /= n;
      const std::uint8_t a = static_cast<std::uint8_t>(rest % n); rest /= n;
      const std::uint64_t b_mask = rest % nmasks; rest /= nmasks;
      const std::uint64_t a_mask = rest;

      const std::uint64_t ta = dg.translate_mask(a, a_mask);
      const std::uint64_t tb = dg.translate_mask(b, b_mask);
      if (ta & tb) continue;  // need aA n bB = {}
      const std::uint64_t rhs_union = a_mask | b_mask;
      const std::uint64_t lhs_union = ta | tb;
      if (lhs_union & ~rhs_union) continue;

      ++res.inclusions_satisfied;
      if (opts.collect_satisfying) res.satisfying.push_back(pack_tuple(a_mask, b_mask, a, b, 0));
      if (lhs_union != rhs_union || (a_mask & b_mask) != 0)
        res.violations.push_back({idx, pack_tuple(a_mask, b_mask, a, b, 0), "equality-failure"});
    }
  };
  return run_partitioned(total, opts.jobs, body);
}

}  // namespace swelling
