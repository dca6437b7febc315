#include "swelling/json_io.hpp"
#include "swelling/sampling.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace swelling;

namespace {

std::size_t env_jobs() {
  const char* v = std::getenv("SWELLING_JOBS");
  if (v == nullptr || *v == '\0') return 0;
  char* end = nullptr;
  const unsigned long n = std::strtoul(v, &end, 10);
  if (end == v || *end != '\0') return 0;
  return static_cast<std::size_t>(n);
}

// Precedence: explicit --jobs flag, then SWELLING_JOBS, then the fallback
// (search config value or 1).
std::size_t resolve_jobs(std::size_t flag_value) {
  if (flag_value != 0) return flag_value;
  return env_jobs();
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(out_path, std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open output file " + out_path);
  f << j.dump(2) << '\n';
}

void emit_lines(const std::vector<std::string>& lines, const std::string& out_path) {
  if (out_path.empty()) {
    for (const auto& line : lines) std::cout << line << '\n';
    return;
  }
  std::ofstream f(out_path, std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open output file " + out_path);
  for (const auto& line : lines) f << line << '\n';
}

RunManifest start_manifest(const std::string& command, const std::vector<std::string>& argv,
                           std::uint64_t seed, std::string config_hash) {
  RunManifest m;
  m.command = command;
  m.argv = argv;
  m.seed = seed;
  if (config_hash.empty()) {
    std::string joined;
    for (const auto& a : argv) {
      joined += a;
      joined.push_back('\n');
    }
    config_hash = fnv1a_hex(joined);
  }
  m.config_hash = std::move(config_hash);
  m.started_at = iso8601_now();
  return m;
}

struct VerifyArgs {
  bool real = false;
  std::string group, set_a, set_b, a, b, c, out;
};

int run_verify(const VerifyArgs& args, const std::vector<std::string>& argv) {
  RunManifest m = start_manifest("verify", argv, 0, "");
  Json j;
  if (args.real) {
    const IntervalSet a_set = parse_interval_set(args.set_a);
    const IntervalSet b_set = parse_interval_set(args.set_b);
    const QuadScalar a = parse_quad(args.a), b = parse_quad(args.b), c = parse_quad(args.c);
    const RealSwellingVerdict v = check_swelling_real(a_set, b_set, a, b, c);
    m.finished_at = iso8601_now();
    j["manifest"] = manifest_to_json(m);
    j["mode"] = "real";
    j["A"] = interval_set_to_json(a_set);
    j["B"] = interval_set_to_json(b_set);
    j["a"] = format_quad(a);
    j["b"] = format_quad(b);
    j["c"] = format_quad(c);
    j["verdict"] = real_verdict_to_json(v);
    std::cerr << "verify(real): union " << (v.union_equality ? "=" : "!=") << ", intersection "
              << (v.inter_equality ? "=" : "!=") << "\n";
  } else {
    if (args.group.empty()) throw std::invalid_argument("verify: --group or --real is required");
    const GroupDescriptor g = parse_group_spec(args.group);
    const FiniteSubset a_set = FiniteSubset::of(g, parse_element_list(g, args.set_a));
    const FiniteSubset b_set = FiniteSubset::of(g, parse_element_list(g, args.set_b));
    const GroupElement a = parse_element(g, args.a);
    const GroupElement b = parse_element(g, args.b);
    const GroupElement c = parse_element(g, args.c);
    const SwellingVerdict v = check_swelling_pair(g, a_set, b_set, a, b, c);
    m.finished_at = iso8601_now();
    j["manifest"] = manifest_to_json(m);
    j["mode"] = "finite";
    j["group"] = format_group_spec(g);
    Json ea = Json::array(), eb = Json::array();
    for (const auto& e : a_set.elems()) ea.push_back(format_element(g, e));
    for (const auto& e : b_set.elems()) eb.push_back(format_element(g, e));
    j["A"] = std::move(ea);
    j["B"] = std::move(eb);
    j["a"] = format_element(g, a);
    j["b"] = format_element(g, b);
    j["c"] = format_element(g, c);
    j["verdict"] = verdict_to_json(g, v);
    std::cerr << "verify(" << format_group_spec(g) << "): union "
              << (v.union_equality ? "=" : "!=") << ", intersection "
              << (v.inter_equality ? "=" : "!=") << "\n";
  }
  emit(j, args.out);
  return 0;
}

struct SweepArgs {
  std::string group, out;
  bool weak = false;
  std::size_t jobs = 0;
  std::size_t order_cap = 8;
};

int run_sweep(const SweepArgs& args, const std::vector<std::string>& argv) {
  RunManifest m = start_manifest("sweep", argv, 0, "");
  const GroupDescriptor g = parse_group_spec(args.group);
  SweepOptions opts;
  std::size_t jobs = resolve_jobs(args.jobs);
  opts.jobs = static_cast<int>(jobs == 0 ? 1 : jobs);
  opts.audit_chains = true;
  opts.group_order_cap = args.order_cap;
  const SweepSummary summary =
      args.weak ? sweep_weak_two_swelling(g, opts) : sweep_two_swelling(g, opts);
  const DenseGroup dg = DenseGroup::build(g);
  m.finished_at = iso8601_now();
  Json j;
  j["manifest"] = manifest_to_json(m);
  j["variant"] = args.weak ? "weak" : "standard";
  Json body = sweep_to_json(dg, summary);
  for (auto& [key, value] : body.items()) j[key] = value;
  emit(j, args.out);
  std::cerr << "sweep(" << format_group_spec(g) << "): " << summary.tuples_checked << " tuples, "
            << summary.violations.size() << " violations\n";
  return summary.violations.empty() ? 0 : 1;
}

struct AuditArgs {
  std::string group, set_a, set_b, a, b, c, out;
  std::string chain_case, h2;
  std::size_t closure_cap = 1'000'000;
};

int run_audit(const AuditArgs& args, const std::vector<std::string>& argv) {
  RunManifest m = start_manifest("audit-cosets", argv, 0, "");
  const GroupDescriptor g = parse_group_spec(args.group);
  const FiniteSubset a_set = FiniteSubset::of(g, parse_element_list(g, args.set_a));
  const FiniteSubset b_set = FiniteSubset::of(g, parse_element_list(g, args.set_b));
  const GroupElement a = parse_element(g, args.a);
  const GroupElement b = parse_element(g, args.b);
  const GroupElement c = parse_element(g, args.c);

  const CosetCountReport count_report =
      audit_coset_chains(g, a_set, b_set, a, b, c, args.closure_cap);
  bool violation = !count_report.all_collapse;

  Json j;
  Json ineq = nullptr;
  if (!args.chain_case.empty()) {
    if (args.h2.empty())
      throw std::invalid_argument("audit-cosets: --case requires --h2 generators");
    ChainCase which;
    if (args.chain_case == "a")
      which = ChainCase::TranslateA;
    else if (args.chain_case == "b")
      which = ChainCase::TranslateB;
    else if (args.chain_case == "c")
      which = ChainCase::TranslateC;
    else
      throw std::invalid_argument("audit-cosets: --case must be a, b or c");
    auto h2 = SubgroupDescriptor::build(g, parse_element_list(g, args.h2), args.closure_cap);
    const InequalityChainReport r = audit_inequality_chains(g, a_set, b_set, a, b, c, h2, which);
    violation = violation || r.strict_count != 0;
    ineq = inequality_report_to_json(g, r);
  }
  m.finished_at = iso8601_now();
  j["manifest"] = manifest_to_json(m);
  j["group"] = format_group_spec(g);
  Json body = coset_report_to_json(g, count_report);
  for (auto& [key, value] : body.items()) j[key] = value;
  j["inequality_audit"] = std::move(ineq);
  emit(j, args.out);
  std::cerr << "audit-cosets(" << format_group_spec(g) << "): " << count_report.rows.size()
            << " cosets, " << (count_report.all_collapse ? "all chains collapse" : "VIOLATION")
            << "\n";
  return violation ? 1 : 0;
}

struct Lemma1Args {
  std::string group, k_set, h_gens, out;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t max_set = 12;
  std::size_t max_gens = 2;
  long magnitude = 8;
};

int run_lemma1(const Lemma1Args& args, const std::vector<std::string>& argv) {
  RunManifest m = start_manifest("lemma1", argv, args.seed, "");
  const GroupDescriptor g = parse_group_spec(args.group);
  Json j;
  int rc = 0;
  if (args.trials == 0) {
    if (args.k_set.empty() || args.h_gens.empty())
      throw std::invalid_argument("lemma1: provide --K and --H, or --trials");
    const FiniteSubset k = FiniteSubset::of(g, parse_element_list(g, args.k_set));
    const auto h = SubgroupDescriptor::build(g, parse_element_list(g, args.h_gens));
    const CosetBoundReport r = check_coset_count_bound(k, h);
    m.finished_at = iso8601_now();
    j["manifest"] = manifest_to_json(m);
    j["group"] = format_group_spec(g);
    Json ks = Json::array();
    for (const auto& e : k.elems()) ks.push_back(format_element(g, e));
    j["K"] = std::move(ks);
    j["report"] = coset_bound_to_json(r);
    rc = r.holds ? 0 : 1;
    std::cerr << "lemma1(" << format_group_spec(g) << "): max " << r.max_coset_count
              << " <= bound " << r.difference_bound << (r.holds ? "" : "  VIOLATION") << "\n";
  } else {
    std::mt19937_64 eng(args.seed);
    std::size_t failures = 0;
    Json first_failure = nullptr;
    for (std::size_t t = 0; t < args.trials; ++t) {
      const FiniteSubset k = random_subset(g, eng, args.max_set, args.magnitude);
      const auto gens = random_generators(g, eng, args.max_gens, args.magnitude);
      const auto h = SubgroupDescriptor::build(g, gens);
      const CosetBoundReport r = check_coset_count_bound(k, h);
      if (!r.holds) {
        ++failures;
        if (first_failure.is_null()) {
          Json f;
          Json ks = Json::array(), gs = Json::array();
          for (const auto& e : k.elems()) ks.push_back(format_element(g, e));
          for (const auto& e : gens) gs.push_back(format_element(g, e));
          f["K"] = std::move(ks);
          f["H_generators"] = std::move(gs);
          f["report"] = coset_bound_to_json(r);
          first_failure = std::move(f);
        }
      }
    }
    m.finished_at = iso8601_now();
    j["manifest"] = manifest_to_json(m);
    j["group"] = format_group_spec(g);
    j["trials"] = args.trials;
    j["seed"] = args.seed;
    j["all_hold"] = failures == 0;
    j["failures"] = failures;
    j["first_failure"] = std::move(first_failure);
    rc = failures == 0 ? 0 : 1;
    std::cerr << "lemma1(" << format_group_spec(g) << "): " << args.trials << " trials, "
              << failures << " bound violations\n";
  }
  emit(j, args.out);
  return rc;
}

struct OrbitArgs {
  std::string set_a, set_b, a, b, x0, out;
  std::size_t steps = 10'000;
};

int run_orbit_cmd(const OrbitArgs& args, const std::vector<std::string>& argv) {
  RunManifest m = start_manifest("orbit", argv, 0, "");
  OrbitParams params;
  params.a_set = parse_interval_set(args.set_a);
  params.b_set = parse_interval_set(args.set_b);
  params.a = parse_quad(args.a);
  params.b = parse_quad(args.b);
  if (params.a_set.empty()) throw std::invalid_argument("orbit: A must be nonempty");
  params.x0 = args.x0.empty() ? params.a_set.pieces().front().lo : parse_quad(args.x0);
  params.max_steps = args.steps;

  const OrbitTrace trace = run_orbit(params);
  const auto cert = escape_certifies_failure(trace);
  const GapStatistics gaps = projected_gap_stats(trace, params.b);
  m.finished_at = iso8601_now();

  std::vector<std::string> lines;
  lines.reserve(trace.steps.size() + 2);
  Json head;
  head["manifest"] = manifest_to_json(m);
  head["params"] = orbit_params_to_json(params);
  lines.push_back(head.dump());
  for (std::size_t i = 0; i < trace.steps.size(); ++i)
    lines.push_back(orbit_step_to_json(i + 1, trace.steps[i]).dump());
  Json tail;
  tail["escape_index"] = trace.escape_index ? Json(*trace.escape_index) : Json(nullptr);
  tail["a_steps"] = trace.a_step_count();
  tail["b_steps"] = trace.b_step_count();
  if (cert) {
    Json c;
    c["y"] = format_quad(cert->y);
    c["in_translated_union"] = cert->in_translated_union;
    c["outside_union"] = cert->outside_union;
    c["valid"] = cert->valid();
    tail["certificate"] = std::move(c);
  } else {
    tail["certificate"] = nullptr;
  }
  tail["gap_stats"] = gap_stats_to_json(gaps);
  lines.push_back(tail.dump());
  emit_lines(lines, args.out);

  if (trace.escape_index)
    std::cerr << "orbit: escaped at step " << *trace.escape_index << " (certificate "
              << (cert && cert->valid() ? "valid" : "INVALID") << ")\n";
  else
    std::cerr << "orbit: no escape within " << trace.steps.size() << " steps\n";
  return (cert && !cert->valid()) ? 1 : 0;
}

struct SearchArgs {
  std::string config_path, out;
  std::size_t jobs = 0;
};

int run_search_cmd(const SearchArgs& args, const std::vector<std::string>& argv) {
  std::ifstream in(args.config_path);
  if (!in) throw std::invalid_argument("search: cannot read config file " + args.config_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const SearchConfig cfg = parse_search_config(buf.str());
  RunManifest m = start_manifest("search", argv, cfg.seed, search_config_hash(cfg));
  const SearchReport report = run_search(cfg, resolve_jobs(args.jobs));
  m.finished_at = iso8601_now();
  Json j;
  j["manifest"] = manifest_to_json(m);
  Json body = search_report_to_json(report);
  for (auto& [key, value] : body.items()) j[key] = value;
  emit(j, args.out);
  std::cerr << "search: " << report.candidates_generated << " candidates, "
            << report.fully_verified << " verified, " << report.counterexamples.size()
            << " counterexamples in the searched family\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args_vec(argv, argv + argc);

  CLI::App app{"Exact verifiers for translate-inclusion problems on groups"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check the four conditions for one (A,B,a,b,c)");
  verify->add_flag("--real", va.real, "Interval mode over the line");
  verify->add_option("--group", va.group, "Group spec, e.g. Zmod:6, Zn:2, S3, Q, QSqrt2");
  verify->add_option("--A", va.set_a, "Set A")->required();
  verify->add_option("--B", va.set_b, "Set B")->required();
  verify->add_option("--a", va.a, "Translation a")->required();
  verify->add_option("--b", va.b, "Translation b")->required();
  verify->add_option("--c", va.c, "Translation c")->required();
  verify->add_option("--out", va.out, "Write JSON report here instead of stdout");

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "Exhaustive tuple sweep over a small finite group");
  sweep->add_option("--group", sa.group, "Group spec")->required();
  sweep->add_flag("--weak", sa.weak, "Disjoint-intersection variant");
  sweep->add_option("--jobs", sa.jobs, "Worker threads");
  sweep->add_option("--order-cap", sa.order_cap, "Refuse groups larger than this");
  sweep->add_option("--out", sa.out, "Output path");

  AuditArgs aa;
  auto* audit = app.add_subcommand("audit-cosets", "Per-coset counting chains for one tuple");
  audit->add_option("--group", aa.group, "Group spec")->required();
  audit->add_option("--A", aa.set_a, "Set A")->required();
  audit->add_option("--B", aa.set_b, "Set B")->required();
  audit->add_option("--a", aa.a, "Translation a")->required();
  audit->add_option("--b", aa.b, "Translation b")->required();
  audit->add_option("--c", aa.c, "Translation c")->required();
  audit->add_option("--case", aa.chain_case, "Inequality case: a, b or c");
  audit->add_option("--h2", aa.h2, "Generators of the two-element subgroup for --case");
  audit->add_option("--closure-cap", aa.closure_cap, "Enumerated-closure size cap");
  audit->add_option("--out", aa.out, "Output path");

  Lemma1Args la;
  auto* lemma1 = app.add_subcommand("lemma1", "Coset count bound: max |K n Hx| <= |KK^-1 n H|");
  lemma1->add_option("--group", la.group, "Group spec")->required();
  lemma1->add_option("--K", la.k_set, "Finite set K (single check)");
  lemma1->add_option("--H", la.h_gens, "Subgroup generators (single check)");
  lemma1->add_option("--trials", la.trials, "Randomized trial count");
  lemma1->add_option("--seed", la.seed, "RNG seed for trials");
  lemma1->add_option("--max-set", la.max_set, "Max |K| per trial");
  lemma1->add_option("--max-gens", la.max_gens, "Max generators per trial");
  lemma1->add_option("--magnitude", la.magnitude, "Coordinate magnitude bound");
  lemma1->add_option("--out", la.out, "Output path");

  OrbitArgs oa;
  auto* orbit = app.add_subcommand("orbit", "Iterate x -> a+x (x in A) / b+x, report escape");
  orbit->add_option("--A", oa.set_a, "Interval set A")->required();
  orbit->add_option("--B", oa.set_b, "Interval set B")->required();
  orbit->add_option("--a", oa.a, "Translation a")->required();
  orbit->add_option("--b", oa.b, "Translation b")->required();
  orbit->add_option("--x0", oa.x0, "Start point (default: least endpoint of A)");
  orbit->add_option("--steps", oa.steps, "Max steps");
  orbit->add_option("--out", oa.out, "Output path (JSONL)");

  SearchArgs ra;
  auto* search = app.add_subcommand("search", "Filtered counterexample search from a config file");
  search->add_option("--config", ra.config_path, "key=value config file")->required();
  search->add_option("--jobs", ra.jobs, "Worker threads (overrides config)");
  search->add_option("--out", ra.out, "Output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(verify)) return run_verify(va, args_vec);
    if (app.got_subcommand(sweep)) return run_sweep(sa, args_vec);
    if (app.got_subcommand(audit)) return run_audit(aa, args_vec);
    if (app.got_subcommand(lemma1)) return run_lemma1(la, args_vec);
    if (app.got_subcommand(orbit)) return run_orbit_cmd(oa, args_vec);
    if (app.got_subcommand(search)) return run_search_cmd(ra, args_vec);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
