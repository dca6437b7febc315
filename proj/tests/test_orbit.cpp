#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "swelling/interval_set.hpp"
#include "swelling/orbit.hpp"

#include <random>

using namespace swelling;

namespace {

QuadScalar q_of(long num, long den = 1) { return QuadScalar::of_rational(Rational(num, den)); }

OrbitParams params_of(const char* a_txt, const char* b_txt, const char* a, const char* b,
                      const char* x0, std::size_t steps) {
  OrbitParams p;
  p.a_set = parse_interval_set(a_txt);
  p.b_set = parse_interval_set(b_txt);
  p.a = parse_quad(a);
  p.b = parse_quad(b);
  p.x0 = parse_quad(x0);
  p.max_steps = steps;
  return p;
}

QuadScalar mod_abs(const QuadScalar& x, const QuadScalar& modulus) {
  const QuadScalar m = qs_abs(modulus);
  const QuadScalar k = QuadScalar::of_rational(Rational((x / m).floor()));
  return x - k * m;
}

}  // namespace

TEST_CASE("periodic tuple never escapes") {
  const OrbitTrace t = run_orbit(params_of("[0,2]", "[1,3]", "1", "-1", "0", 50));
  CHECK_FALSE(t.escape_index.has_value());
  CHECK(t.steps.size() == 50);
  REQUIRE(t.steps.size() >= 5);
  CHECK(t.steps[0].x == q_of(1));
  CHECK(t.steps[1].x == q_of(2));
  CHECK(t.steps[2].x == q_of(3));
  CHECK(t.steps[3].x == q_of(2));  // 3 is outside A, inside B: b-step back
  CHECK(t.steps[4].x == q_of(3));
  CHECK(t.steps[0].s == StepKind::AStep);
  CHECK(t.steps[3].s == StepKind::BStep);
  CHECK_FALSE(escape_certifies_failure(t).has_value());
}

TEST_CASE("irrational tuple escapes at step 4 with a valid certificate") {
  const OrbitTrace t = run_orbit(params_of("[0,2]", "[1,3]", "sqrt2", "-1", "0", 10'000));
  REQUIRE(t.escape_index.has_value());
  CHECK(*t.escape_index == 4);
  CHECK(t.steps.size() == 4);  // stops at the escape
  CHECK(t.steps.back().x == QuadScalar(Rational(-1), Rational(3)));  // 3*sqrt2 - 1
  CHECK(t.steps[0].s == StepKind::AStep);
  CHECK(t.steps[1].s == StepKind::AStep);
  CHECK(t.steps[2].s == StepKind::BStep);
  CHECK(t.steps[3].s == StepKind::AStep);
  CHECK(t.a_step_count() == 3);
  CHECK(t.b_step_count() == 1);

  const auto cert = escape_certifies_failure(t);
  REQUIRE(cert.has_value());
  CHECK(cert->y == QuadScalar(Rational(-1), Rational(3)));
  CHECK(cert->in_translated_union);
  CHECK(cert->outside_union);
  CHECK(cert->valid());

  // Independent cross-check by direct interval algebra.
  const IntervalSet tuni = set_union(translate_set(t.params.a, t.params.a_set),
                                     translate_set(t.params.b, t.params.b_set));
  const IntervalSet uni = set_union(t.params.a_set, t.params.b_set);
  CHECK(tuni.contains(cert->y));
  CHECK_FALSE(uni.contains(cert->y));
}

TEST_CASE("pure drift escapes when the translate outruns the set") {
  const OrbitTrace t = run_orbit(params_of("[0,5]", "[0,5]", "1", "7", "0", 100));
  REQUIRE(t.escape_index.has_value());
  CHECK(*t.escape_index == 6);
  CHECK(t.steps.back().x == q_of(6));
  CHECK(t.a_step_count() == 6);
  CHECK(t.b_step_count() == 0);
}

TEST_CASE("points in both sets take the a-step") {
  // x0 = 1 lies in A and in B; the rule tests A first.
  const OrbitTrace t = run_orbit(params_of("[0,2]", "[0,9]", "2", "1", "1", 1));
  REQUIRE(t.steps.size() == 1);
  CHECK(t.steps[0].s == StepKind::AStep);
  CHECK(t.steps[0].x == q_of(3));
}

TEST_CASE("orbit preconditions") {
  CHECK_THROWS_AS(run_orbit(params_of("[0,2]", "[1,3]", "1", "-1", "5", 10)),
                  std::invalid_argument);  // x0 outside A
  CHECK_THROWS_AS(run_orbit(params_of("[0,2]", "[1,3]", "0", "-1", "0", 10)),
                  std::invalid_argument);  // zero translation
  CHECK_THROWS_AS(run_orbit(params_of("[0,2]", "[1,3]", "1", "0", "0", 10)),
                  std::invalid_argument);
}

TEST_CASE("no escape on the example family (induction soundness)") {
  std::mt19937_64 eng(61);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 4);
  int done = 0;
  while (done < 100) {
    QuadScalar vals[4];
    for (auto& v : vals) v = q_of(num(eng), den(eng));
    std::sort(std::begin(vals), std::end(vals));
    if (vals[0] == vals[1] || vals[1] == vals[2] || vals[2] == vals[3]) continue;
    const IntervalExample ex = interval_example(vals[0], vals[1], vals[2], vals[3]);
    REQUIRE(ex.verdict.all_hold());
    OrbitParams p;
    p.a_set = ex.a_set;
    p.b_set = ex.b_set;
    p.a = ex.a;
    p.b = ex.b;
    p.x0 = ex.a_set.pieces().front().lo;
    p.max_steps = 500;
    const OrbitTrace t = run_orbit(p);
    CHECK_FALSE(t.escape_index.has_value());
    CHECK_FALSE(escape_certifies_failure(t).has_value());
    ++done;
  }
}

TEST_CASE("projection changes only on a-steps, by exactly a mod |b|") {
  const OrbitTrace t = run_orbit(params_of("[0,2]", "[1,3]", "sqrt2", "-1", "0", 10));
  QuadScalar prev = mod_abs(t.params.x0, t.params.b);
  for (const auto& st : t.steps) {
    const QuadScalar cur = mod_abs(st.x, t.params.b);
    if (st.s == StepKind::AStep)
      CHECK(cur == mod_abs(prev + t.params.a, t.params.b));
    else
      CHECK(cur == prev);
    prev = cur;
  }
}

TEST_CASE("gap statistics: small pinned cases") {
  // Rational rotation 1/2 mod 1: two values forever.
  const OrbitTrace rat = run_orbit(params_of("[0,1000]", "[0,1000]", "1/2", "1", "0", 64));
  const GapStatistics g = projected_gap_stats(rat, rat.params.b);
  CHECK(g.modulus == q_of(1));
  CHECK(g.distinct_points == 2);
  CHECK(g.max_gap == q_of(1, 2));
  CHECK(g.min_gap == q_of(1, 2));

  // Single a-step: two points, circular gaps sum to the modulus.
  const OrbitTrace one = run_orbit(params_of("[0,10]", "[0,10]", "sqrt2", "3", "0", 1));
  const GapStatistics g1 = projected_gap_stats(one, one.params.b);
  CHECK(g1.distinct_points == 2);
  CHECK(g1.max_gap + g1.min_gap == g1.modulus);
}

TEST_CASE("irrational rotation: three-distance structure and shrinking gaps") {
  const OrbitTrace t =
      run_orbit(params_of("[0,1000000]", "[0,1000000]", "sqrt2", "1", "0", 1023));
  const GapStatistics g = projected_gap_stats(t, t.params.b);
  CHECK(g.distinct_points == 1024);  // all projections distinct for irrational rotation
  CHECK(g.gap_lengths.size() <= 3);

  // Sum of circular gaps equals the modulus: count each distinct length.
  QuadScalar total = q_of(0);
  {
    const auto& pts = g.points;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) total += pts[i + 1] - pts[i];
    total += g.modulus - pts.back() + pts.front();
  }
  CHECK(total == g.modulus);

  const OrbitTrace t2 =
      run_orbit(params_of("[0,1000000]", "[0,1000000]", "sqrt2", "1", "0", 255));
  const GapStatistics g2 = projected_gap_stats(t2, t2.params.b);
  CHECK(g2.gap_lengths.size() <= 3);
  CHECK(g.max_gap < g2.max_gap);  // more points, strictly finer partition
}
