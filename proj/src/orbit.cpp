#include "swelling/orbit.hpp"

#include <algorithm>
#include <stdexcept>

namespace swelling {

namespace {

QuadScalar reduce_mod(const QuadScalar& x, const QuadScalar& m) {
  BigInt k = (x / m).floor();
  return x - QuadScalar::of_rational(Rational(k)) * m;
}

}  // namespace

std::size_t OrbitTrace::a_step_count() const {
  return static_cast<std::size_t>(
      std::count_if(steps.begin(), steps.end(),
                    [](const OrbitStep& st) { return st.s == StepKind::AStep; }));
}

std::size_t OrbitTrace::b_step_count() const { return steps.size() - a_step_count(); }

OrbitTrace run_orbit(OrbitParams params) {
  if (params.a.is_zero() || params.b.is_zero())
    throw std::invalid_argument("orbit requires nonzero translations");
  if (!params.a_set.contains(params.x0))
    throw std::invalid_argument("orbit start point must lie in A");

  OrbitTrace trace;
  QuadScalar x = params.x0;
  bool in_a = true;  // x0 in A by precondition
  for (std::size_t n = 1; n <= params.max_steps; ++n) {
    OrbitStep step;
    // A is tested first, so a point of A n B takes the a-step.
    step.s = in_a ? StepKind::AStep : StepKind::BStep;
    x = (step.s == StepKind::AStep ? params.a : params.b) + x;
    step.x = x;
    step.in_a = params.a_set.contains(x);
    step.in_b = params.b_set.contains(x);
    in_a = step.in_a;
    const bool escaped = !step.in_a && !step.in_b;
    trace.steps.push_back(std::move(step));
    if (escaped) {
      trace.escape_index = n;
      break;
    }
  }
  trace.params = std::move(params);
  return trace;
}

std::optional<EscapeCertificate> escape_certifies_failure(const OrbitTrace& trace) {
  if (!trace.escape_index) return std::nullopt;
  EscapeCertificate cert;
  cert.y = trace.steps.back().x;
  const IntervalSet tuni = set_union(translate_set(trace.params.a, trace.params.a_set),
                                     translate_set(trace.params.b, trace.params.b_set));
  const IntervalSet uni = set_union(trace.params.a_set, trace.params.b_set);
  cert.in_translated_union = tuni.contains(cert.y);
  cert.outside_union = !uni.contains(cert.y);
  return cert;
}

GapStatistics projected_gap_stats(const OrbitTrace& trace, const QuadScalar& b) {
  if (b.is_zero()) throw std::invalid_argument("projection modulus must be nonzero");
  const QuadScalar m = qs_abs(b);

  std::vector<QuadScalar> pts;
  pts.reserve(trace.steps.size() + 1);
  pts.push_back(reduce_mod(trace.params.x0, m));
  for (const auto& step : trace.steps) pts.push_back(reduce_mod(step.x, m));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  GapStatistics stats;
  stats.modulus = m;
  stats.distinct_points = pts.size();

  std::vector<QuadScalar> gaps;
  gaps.reserve(pts.size());
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) gaps.push_back(pts[i + 1] - pts[i]);
  gaps.push_back(m - pts.back() + pts.front());  // wraparound
  stats.max_gap = *std::max_element(gaps.begin(), gaps.end());
  stats.min_gap = *std::min_element(gaps.begin(), gaps.end());
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  stats.gap_lengths = std::move(gaps);
  stats.points = std::move(pts);
  return stats;
}

}  // namespace swelling
