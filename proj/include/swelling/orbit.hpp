#pragma once

#include "swelling/interval_set.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace swelling {

enum class StepKind { AStep, BStep };

struct OrbitParams {
  IntervalSet a_set;
  IntervalSet b_set;
  QuadScalar a;
  QuadScalar b;
  QuadScalar x0;
  std::size_t max_steps = 10'000;
};

/// One generated point x_n together with the step type that produced it and
/// its exact memberships.
struct OrbitStep {
  QuadScalar x;
  StepKind s = StepKind::AStep;
  bool in_a = false;
  bool in_b = false;
};

/// Iteration x_n = a + x_{n-1} when x_{n-1} in A (checked first, so points of
/// A n B take the a-step), else x_n = b + x_{n-1}. Stops at the first point
/// outside A u B or after max_steps steps. steps[i] holds x_{i+1}.
struct OrbitTrace {
  OrbitParams params;
  std::vector<OrbitStep> steps;
  std::optional<std::size_t> escape_index;  // least n with x_n outside A u B

  std::size_t a_step_count() const;
  std::size_t b_step_count() const;
};

/// Throws std::invalid_argument when x0 is outside A or a translation is zero.
OrbitTrace run_orbit(OrbitParams params);

/// An escape point certifies that the union inclusion fails: y = x_n lies in
/// (a+A) u (b+B) but not in A u B. Both claims are re-checked here by direct
/// interval algebra, independent of the trace's own membership flags.
struct EscapeCertificate {
  QuadScalar y;
  bool in_translated_union = false;
  bool outside_union = false;

  bool valid() const { return in_translated_union && outside_union; }
};

std::optional<EscapeCertificate> escape_certifies_failure(const OrbitTrace& trace);

/// Orbit points reduced mod |b| on the fundamental domain [0,|b|), with
/// circular gap statistics (wraparound gap included, so gaps sum to the
/// modulus). Projections change only on a-steps, by the fixed rotation
/// amount (a mod |b|).
struct GapStatistics {
  QuadScalar modulus;
  std::vector<QuadScalar> points;  // distinct projected values, sorted
  std::size_t distinct_points = 0;
  QuadScalar max_gap;
  QuadScalar min_gap;
  std::vector<QuadScalar> gap_lengths;  // distinct circular gap lengths, sorted
};

/// Throws std::invalid_argument when b == 0.
GapStatistics projected_gap_stats(const OrbitTrace& trace, const QuadScalar& b);

}  // namespace swelling
