// Acceptance gate: nine desk-scale checks, one pass/fail line each.
// Exit 0 only when every criterion passes.

#include "swelling/coset.hpp"
#include "swelling/interval_set.hpp"
#include "swelling/json_io.hpp"
#include "swelling/orbit.hpp"
#include "swelling/sampling.hpp"
#include "swelling/search.hpp"
#include "swelling/sweep.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace swelling;

namespace {

int g_failures = 0;

void report(int num, const char* name, bool pass, const std::string& detail) {
  std::printf("criterion %d (%s): %s%s%s\n", num, name, pass ? "PASS" : "FAIL",
              detail.empty() ? "" : " - ", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

QuadScalar q_of(long num, long den = 1) { return QuadScalar::of_rational(Rational(num, den)); }

// ---- criteria 1 and 2: exhaustive sweeps plus chain audits --------------

struct SweepJoint {
  bool c1_pass = true, c2_pass = true;
  std::string c1_detail, c2_detail;
};

SweepJoint run_sweep_criteria() {
  SweepJoint out;
  const char* specs[] = {"Zmod:2", "Zmod:3", "Zmod:4", "Zmod:5", "Zmod:6", "S3"};
  std::uint64_t total_tuples = 0, total_satisfying = 0, audits = 0;
  std::size_t cross_checked = 0;
  double worst_big_group = 0;
  for (const char* spec : specs) {
    const GroupDescriptor g = parse_group_spec(spec);
    SweepOptions opts;
    opts.jobs = 4;
    opts.audit_chains = true;
    opts.collect_satisfying = (g.order() == 6);
    const auto t0 = std::chrono::steady_clock::now();
    const SweepSummary s = sweep_two_swelling(g, opts);
    const double secs = seconds_since(t0);
    if (g.order() == 6 && secs > worst_big_group) worst_big_group = secs;

    const std::size_t n = g.order();
    const std::uint64_t subsets = 1ull << n;
    if (s.tuples_checked != subsets * subsets * n * n * n) {
      out.c1_pass = false;
      out.c1_detail = std::string(spec) + ": tuple count mismatch";
    }
    if (!s.violations.empty()) {
      out.c1_pass = false;
      out.c1_detail = std::string(spec) + ": " + std::to_string(s.violations.size()) +
                      " equality/chain violations";
    }
    if (s.audits_run != s.inclusions_satisfied) {
      out.c2_pass = false;
      out.c2_detail = std::string(spec) + ": audit coverage gap";
    }
    total_tuples += s.tuples_checked;
    total_satisfying += s.inclusions_satisfied;
    audits += s.audits_run;

    // Independent re-audit of a deterministic slice through the generic path.
    if (opts.collect_satisfying) {
      const DenseGroup dg = DenseGroup::build(g);
      for (std::size_t i = 0; i < s.satisfying.size(); i += 97) {
        const DecodedTuple t = decode_packed_tuple(dg, s.satisfying[i]);
        const CardinalityChainReport r =
            audit_cardinality_chain(g, t.set_a, t.set_b, t.a, t.b, t.c);
        ++cross_checked;
        if (!r.chain_collapses) {
          out.c2_pass = false;
          out.c2_detail = std::string(spec) + ": generic chain audit failed to collapse";
        }
      }
    }
  }
  if (worst_big_group >= 60.0) {
    out.c1_pass = false;
    out.c1_detail = "order-6 sweep took " + fmt_secs(worst_big_group);
  }
  if (out.c1_pass)
    out.c1_detail = std::to_string(total_tuples) + " tuples over 6 groups, 0 violations, " +
                    "slowest order-6 sweep " + fmt_secs(worst_big_group);
  if (out.c2_pass)
    out.c2_detail = std::to_string(audits) + " in-sweep audits (" +
                    std::to_string(total_satisfying) + " satisfying tuples), " +
                    std::to_string(cross_checked) + " re-audited generically, all collapsed";
  return out;
}

// ---- criterion 3: randomized coset count bound --------------------------

void run_lemma_bound_criterion() {
  const auto t0 = std::chrono::steady_clock::now();
  const char* specs[] = {"Zn:1", "Zn:2", "Zmod:6", "S3", "Q"};
  std::mt19937_64 eng(20260823);
  std::size_t trials = 0, failures = 0;
  for (const char* spec : specs) {
    const GroupDescriptor g = parse_group_spec(spec);
    for (int t = 0; t < 10'000; ++t) {
      const FiniteSubset k = random_subset(g, eng, 20, 8);
      const auto h = SubgroupDescriptor::build(g, random_generators(g, eng, 2, 5));
      ++trials;
      if (!check_coset_count_bound(k, h).holds) ++failures;
    }
  }
  const double secs = seconds_since(t0);
  const bool pass = failures == 0 && secs < 30.0;
  report(3, "coset count bound", pass,
         std::to_string(trials) + " randomized (K,H) trials over 5 carriers, " +
             std::to_string(failures) + " bound violations, " + fmt_secs(secs));
}

// ---- criterion 4: the interval example family ---------------------------

std::vector<IntervalExample> g_family;  // reused by criterion 6

void run_family_criterion() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 eng(20260824);
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 6);
  std::size_t failures = 0;

  auto push_quadruple = [&](QuadScalar vals[4]) {
    const IntervalExample ex = interval_example(vals[0], vals[1], vals[2], vals[3]);
    if (!ex.verdict.all_hold()) ++failures;
    g_family.push_back(ex);
  };

  std::size_t rational_done = 0;
  while (rational_done < 1000) {
    QuadScalar vals[4];
    for (auto& v : vals) v = q_of(num(eng), den(eng));
    std::sort(std::begin(vals), std::end(vals));
    if (vals[0] == vals[1] || vals[1] == vals[2] || vals[2] == vals[3]) continue;
    push_quadruple(vals);
    ++rational_done;
  }
  std::size_t irrational_done = 0;
  while (irrational_done < 100) {
    QuadScalar vals[4];
    for (auto& v : vals) v = QuadScalar(Rational(num(eng), den(eng)), Rational(num(eng), 12));
    std::sort(std::begin(vals), std::end(vals));
    if (vals[0] == vals[1] || vals[1] == vals[2] || vals[2] == vals[3]) continue;
    push_quadruple(vals);
    ++irrational_done;
  }
  const double secs = seconds_since(t0);
  const bool pass = failures == 0 && secs < 5.0;
  report(4, "interval example family", pass,
         "1000 rational + 100 sqrt2-spaced quadruples, " + std::to_string(failures) +
             " equality failures, " + fmt_secs(secs));
}

// ---- criterion 5: coset audit reassembly --------------------------------

void run_reassembly_criterion() {
  std::mt19937_64 eng(20260825);
  const char* specs[] = {"Zmod:6", "Zmod:8", "Zmod:9", "S3"};
  std::size_t audited = 0, failures = 0;
  std::size_t which = 0;
  while (audited < 1000) {
    const GroupDescriptor g = parse_group_spec(specs[which++ % 4]);
    const FiniteSubset a_set = random_subset(g, eng, 5, 0);
    const FiniteSubset b_set = random_subset(g, eng, 5, 0);
    const GroupElement a = random_element(g, eng, 0), b = random_element(g, eng, 0),
                       c = random_element(g, eng, 0);
    const SwellingVerdict v = check_swelling_pair(g, a_set, b_set, a, b, c);
    if (!(v.union_inclusion && v.inter_inclusion)) continue;
    ++audited;
    const CosetCountReport r = audit_coset_chains(g, a_set, b_set, a, b, c);
    bool ok = r.all_collapse;
    ok = ok && r.reassembled_union == set_union(a_set, b_set);
    ok = ok && r.reassembled_inter == translate(g, c, set_intersection(a_set, b_set));
    for (const auto& row : r.rows) ok = ok && row.union_sets_equal && row.inter_sets_equal;
    if (!ok) ++failures;
  }
  report(5, "coset audit reassembly", failures == 0,
         std::to_string(audited) + " satisfying tuples audited per-coset, " +
             std::to_string(failures) + " reassembly mismatches");
}

// ---- criterion 6: orbit soundness ---------------------------------------

void run_orbit_criterion() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t no_escape_failures = 0;
  for (const IntervalExample& ex : g_family) {
    OrbitParams p;
    p.a_set = ex.a_set;
    p.b_set = ex.b_set;
    p.a = ex.a;
    p.b = ex.b;
    p.x0 = ex.a_set.pieces().front().lo;
    p.max_steps = 10'000;
    const OrbitTrace t = run_orbit(p);
    if (t.escape_index.has_value() || escape_certifies_failure(t).has_value())
      ++no_escape_failures;
  }

  // Affine images of the canonical escaping tuple; the conjugated orbit must
  // escape at the same step with a certificate that revalidates externally.
  std::size_t escape_failures = 0;
  for (int k = 1; k <= 100; ++k) {
    const QuadScalar lam = q_of(k + 6, 7);  // positive scale
    const QuadScalar mu = q_of(3 * k - 150, 5);
    OrbitParams p;
    p.a_set = IntervalSet::single(mu, mu + lam * q_of(2));
    p.b_set = IntervalSet::single(mu + lam, mu + lam * q_of(3));
    p.a = lam * QuadScalar::sqrt2();
    p.b = -lam;
    p.x0 = mu;
    p.max_steps = 10'000;
    const OrbitTrace t = run_orbit(p);
    const auto cert = escape_certifies_failure(t);
    bool ok = t.escape_index.has_value() && *t.escape_index == 4 && cert && cert->valid();
    if (ok) {
      // Independent set-algebra validation of both certificate claims.
      const IntervalSet tuni =
          set_union(translate_set(p.a, p.a_set), translate_set(p.b, p.b_set));
      const IntervalSet uni = set_union(p.a_set, p.b_set);
      ok = tuni.contains(cert->y) && !uni.contains(cert->y);
      // ...and the direct union verdict must agree that the inclusion fails.
      const RealSwellingVerdict v = check_swelling_real(p.a_set, p.b_set, p.a, p.b, q_of(0));
      ok = ok && !v.union_inclusion;
    }
    if (!ok) ++escape_failures;
  }
  const bool pass = no_escape_failures == 0 && escape_failures == 0;
  report(6, "orbit soundness", pass,
         std::to_string(g_family.size()) + " family tuples held for 10^4 steps (" +
             std::to_string(no_escape_failures) + " escapes), 100 escape constructions (" +
             std::to_string(escape_failures) + " certificate failures), " +
             fmt_secs(seconds_since(t0)));
}

// ---- criterion 7: rotation gap mechanics --------------------------------

void run_rotation_criterion() {
  const auto t0 = std::chrono::steady_clock::now();
  OrbitParams p;
  p.a_set = IntervalSet::single(q_of(0), q_of(1'000'000));
  p.b_set = p.a_set;
  p.a = QuadScalar::sqrt2();
  p.b = q_of(1);
  p.x0 = q_of(0);
  p.max_steps = (1u << 14) - 1;  // 2^14 distinct projected points
  const OrbitTrace full = run_orbit(p);

  bool pass = !full.escape_index.has_value();
  std::string note;
  QuadScalar gap_small, gap_large;
  for (int e = 10; e <= 14; ++e) {
    OrbitTrace prefix;
    prefix.params = full.params;
    prefix.steps.assign(full.steps.begin(), full.steps.begin() + ((1u << e) - 1));
    const GapStatistics g = projected_gap_stats(prefix, p.b);
    if (g.distinct_points != (1u << e)) {
      pass = false;
      note = "N=2^" + std::to_string(e) + ": expected distinct points";
    }
    if (g.gap_lengths.size() > 3) {
      pass = false;
      note = "N=2^" + std::to_string(e) + ": " + std::to_string(g.gap_lengths.size()) +
             " distinct gap lengths";
    }
    if (e == 10) gap_large = g.max_gap;
    if (e == 14) gap_small = g.max_gap;
  }
  if (pass && !(gap_small + gap_small < gap_large)) {
    pass = false;
    note = "max gap at 2^14 not below half the 2^10 gap";
  }
  const double secs = seconds_since(t0);
  if (secs >= 10.0) {
    pass = false;
    note = "took " + fmt_secs(secs);
  }
  report(7, "rotation density mechanics", pass,
         pass ? "max gap halved from N=2^10 to N=2^14, <=3 gap lengths at every N, " +
                    fmt_secs(secs)
              : note);
}

// ---- criterion 8: filter soundness --------------------------------------

void run_filter_criterion() {
  SearchConfig cfg;
  cfg.mode = "grid";
  cfg.intervals_max = 2;
  cfg.denominator_max = 2;
  cfg.magnitude_max = 2;
  const ScalarGrid grid = build_scalar_grid(cfg);

  std::size_t dropped = 0, unsound = 0;
  std::size_t by_reason[4] = {0, 0, 0, 0};
  auto force_verify = [&](const CandidateSpec& cand, FilterReason reason) {
    ++dropped;
    bool justified = false;
    switch (reason) {
      case FilterReason::ZeroTranslation:
        ++by_reason[0];
        justified = cand.a.is_zero() || cand.b.is_zero() || cand.c.is_zero();
        break;
      case FilterReason::RationalRatio:
        ++by_reason[1];
        justified = (cand.a / cand.b).is_rational() || (cand.a / cand.c).is_rational() ||
                    (cand.b / cand.c).is_rational();
        break;
      case FilterReason::MeasureTooSmall:
      case FilterReason::CoverageDeficit: {
        ++by_reason[reason == FilterReason::MeasureTooSmall ? 2 : 3];
        const RealSwellingVerdict v =
            check_swelling_real(cand.a_set, cand.b_set, cand.a, cand.b, cand.c);
        justified = !(v.union_inclusion && v.inter_inclusion);
        break;
      }
      case FilterReason::None:
        break;
    }
    if (!justified) ++unsound;
  };

  for (BigInt i = 0; dropped < 1000 && i < grid.total; ++i) {
    const CandidateSpec cand = decode_candidate(grid, i);
    const FilterDecision d = filter_candidate(cand, cfg);
    if (!d.keep) force_verify(cand, d.reason);
  }
  // The grid prefix is dominated by degenerate sets; probe random indices
  // until every reason, coverage-deficit included, has been force-verified.
  for (std::uint64_t draw = 0; by_reason[3] < 25 && draw < 50'000; ++draw) {
    const CandidateSpec cand =
        decode_candidate(grid, random_candidate_index(grid, 20260826, draw));
    const FilterDecision d = filter_candidate(cand, cfg);
    if (!d.keep && d.reason == FilterReason::CoverageDeficit) force_verify(cand, d.reason);
  }
  const bool pass =
      dropped >= 1000 && unsound == 0 && by_reason[0] > 0 && by_reason[1] > 0 &&
      by_reason[2] > 0 && by_reason[3] >= 25;
  char breakdown[160];
  std::snprintf(breakdown, sizeof breakdown,
                "%zu dropped (zero %zu, ratio %zu, measure %zu, coverage %zu), %zu unsound",
                dropped, by_reason[0], by_reason[1], by_reason[2], by_reason[3], unsound);
  report(8, "filter soundness", pass, breakdown);
}

// ---- criterion 9: CLI determinism ---------------------------------------

std::string mask_timestamps(std::string text) {
  for (const char* key : {"\"started_at\": \"", "\"finished_at\": \""}) {
    std::size_t pos = 0;
    while ((pos = text.find(key, pos)) != std::string::npos) {
      const std::size_t start = pos + std::string(key).size();
      const std::size_t end = text.find('"', start);
      if (end == std::string::npos) break;
      text.replace(start, end - start, "MASKED");
      pos = start;
    }
  }
  return text;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

void run_determinism_criterion() {
#ifndef SWELLING_CLI_PATH
  report(9, "search determinism", false, "CLI path not wired into the build");
#else
  const std::string cli = SWELLING_CLI_PATH;
  {
    std::ofstream cfg("c9_search.cfg", std::ios::trunc);
    cfg << "mode=random\nseed=42\nmax_candidates=1200\nintervals_max=2\n"
        << "denominator_max=3\nmagnitude_max=3\nnear_miss_top=5\n";
  }
  const std::string cmd =
      "\"" + cli + "\" search --config c9_search.cfg --out c9_out.json >/dev/null 2>&1";
  std::string runs[3];
  const char* job_env[3] = {"1", "1", "4"};
  bool pass = true;
  std::string note;
  for (int r = 0; r < 3; ++r) {
    setenv("SWELLING_JOBS", job_env[r], 1);
    if (std::system(cmd.c_str()) != 0) {
      pass = false;
      note = "CLI run " + std::to_string(r + 1) + " failed";
      break;
    }
    runs[r] = slurp("c9_out.json");
    if (runs[r].empty()) {
      pass = false;
      note = "empty report on run " + std::to_string(r + 1);
      break;
    }
  }
  unsetenv("SWELLING_JOBS");
  std::remove("c9_search.cfg");
  std::remove("c9_out.json");
  if (pass) {
    const std::string a = mask_timestamps(runs[0]);
    if (a != mask_timestamps(runs[1])) {
      pass = false;
      note = "two jobs=1 runs differ beyond timestamps";
    } else if (a != mask_timestamps(runs[2])) {
      pass = false;
      note = "jobs=1 vs jobs=4 reports differ beyond timestamps";
    }
  }
  report(9, "search determinism", pass,
         pass ? "3 CLI runs (jobs 1,1,4) byte-identical after masking timestamps" : note);
#endif
}

}  // namespace

int main() {
  try {
    const SweepJoint sweeps = run_sweep_criteria();
    report(1, "exhaustive finite sweeps", sweeps.c1_pass, sweeps.c1_detail);
    report(2, "cardinality chain collapse", sweeps.c2_pass, sweeps.c2_detail);
    run_lemma_bound_criterion();
    run_family_criterion();
    run_reassembly_criterion();
    run_orbit_criterion();
    run_rotation_criterion();
    run_filter_criterion();
    run_determinism_criterion();
  } catch (const std::exception& e) {
    std::printf("acceptance aborted: %s\n", e.what());
    return 1;
  }
  std::printf("%s\n", g_failures == 0 ? "all criteria passed" : "SOME CRITERIA FAILED");
  return g_failures == 0 ? 0 : 1;
}
