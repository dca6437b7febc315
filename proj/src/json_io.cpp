#include "swelling/json_io.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

namespace swelling {

namespace {

Json opt_element(const GroupDescriptor& g, const std::optional<GroupElement>& e) {
  if (!e) return nullptr;
  return format_element(g, *e);
}

Json opt_quad(const std::optional<QuadScalar>& q) {
  if (!q) return nullptr;
  return format_quad(*q);
}

std::optional<QuadScalar> opt_quad_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return parse_quad(j.get<std::string>());
}

Json subset_to_json(const GroupDescriptor& g, const FiniteSubset& s) {
  Json arr = Json::array();
  for (const auto& e : s.elems()) arr.push_back(format_element(g, e));
  return arr;
}

const char* step_name(StepKind s) { return s == StepKind::AStep ? "a" : "b"; }

}  // namespace

std::string iso8601_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json manifest_to_json(const RunManifest& m) {
  Json j;
  j["command"] = m.command;
  j["argv"] = m.argv;
  j["config_hash"] = m.config_hash;
  j["seed"] = m.seed;
  j["version"] = m.version;
  j["started_at"] = m.started_at;
  j["finished_at"] = m.finished_at;
  return j;
}

Json verdict_to_json(const GroupDescriptor& g, const SwellingVerdict& v) {
  Json j;
  j["union_inclusion"] = v.union_inclusion;
  j["union_equality"] = v.union_equality;
  j["inter_inclusion"] = v.inter_inclusion;
  j["inter_equality"] = v.inter_equality;
  j["all_hold"] = v.all_hold();
  j["union_witness"] = opt_element(g, v.union_witness);
  j["inter_witness"] = opt_element(g, v.inter_witness);
  return j;
}

Json chain_to_json(const CardinalityChainReport& r) {
  Json j;
  j["values"] = r.values;
  Json links = Json::array();
  for (char link : r.links) links.push_back(std::string(1, link));
  j["links"] = links;
  j["collapses"] = r.chain_collapses;
  return j;
}

Json lemma_check_to_json(const GroupDescriptor& g, const SwellingLemmaCheck& r) {
  Json j;
  j["superset_holds"] = r.superset_holds;
  j["equality_holds"] = r.equality_holds;
  j["witness"] = opt_element(g, r.witness);
  return j;
}

Json sweep_to_json(const DenseGroup& dg, const SweepSummary& s) {
  Json j;
  j["group"] = format_group_spec(dg.desc);
  j["order"] = dg.order();
  j["tuples_checked"] = s.tuples_checked;
  j["inclusions_satisfied"] = s.inclusions_satisfied;
  j["audits_run"] = s.audits_run;
  j["violation_count"] = s.violations.size();
  Json viols = Json::array();
  for (const auto& v : s.violations) {
    DecodedTuple t = decode_packed_tuple(dg, v.packed);
    Json entry;
    entry["tuple_index"] = v.tuple_index;
    entry["kind"] = v.kind;
    entry["A"] = subset_to_json(dg.desc, t.set_a);
    entry["B"] = subset_to_json(dg.desc, t.set_b);
    entry["a"] = format_element(dg.desc, t.a);
    entry["b"] = format_element(dg.desc, t.b);
    entry["c"] = format_element(dg.desc, t.c);
    viols.push_back(std::move(entry));
  }
  j["violations"] = std::move(viols);
  return j;
}

Json coset_bound_to_json(const CosetBoundReport& r) {
  Json j;
  j["max_coset_count"] = r.max_coset_count;
  j["difference_bound"] = r.difference_bound;
  j["holds"] = r.holds;
  return j;
}

Json coset_report_to_json(const GroupDescriptor& g, const CosetCountReport& r) {
  Json j;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json e;
    e["coset_rep"] = format_element(g, row.coset_rep);
    e["a_translate"] = row.a_translate;
    e["b_translate"] = row.b_translate;
    e["translate_inter"] = row.translate_inter;
    e["a_count"] = row.a_count;
    e["b_count"] = row.b_count;
    e["inter_count"] = row.inter_count;
    e["chain"] = row.chain;
    Json links = Json::array();
    for (char link : row.links) links.push_back(std::string(1, link));
    e["links"] = links;
    e["collapsed"] = row.collapsed;
    e["union_sets_equal"] = row.union_sets_equal;
    e["inter_sets_equal"] = row.inter_sets_equal;
    rows.push_back(std::move(e));
  }
  j["rows"] = std::move(rows);
  j["all_collapse"] = r.all_collapse;
  j["reassembled_union"] = subset_to_json(g, r.reassembled_union);
  j["reassembled_inter"] = subset_to_json(g, r.reassembled_inter);
  return j;
}

Json inequality_report_to_json(const GroupDescriptor& g, const InequalityChainReport& r) {
  Json j;
  switch (r.which) {
    case ChainCase::TranslateA: j["case"] = "a-case"; break;
    case ChainCase::TranslateB: j["case"] = "b-case"; break;
    case ChainCase::TranslateC: j["case"] = "c-case"; break;
  }
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json e;
    e["coset_rep"] = format_element(g, row.coset_rep);
    e["label"] = row.label;
    e["lhs"] = row.lhs;
    e["rhs"] = row.rhs;
    e["strict"] = row.strict;
    rows.push_back(std::move(e));
  }
  j["rows"] = std::move(rows);
  j["strict_count"] = r.strict_count;
  return j;
}

Json interval_set_to_json(const IntervalSet& s) {
  Json arr = Json::array();
  for (const auto& iv : s.pieces()) arr.push_back(Json{format_quad(iv.lo), format_quad(iv.hi)});
  return arr;
}

IntervalSet interval_set_from_json(const Json& j) {
  std::vector<Interval> raw;
  for (const auto& pair : j)
    raw.push_back(Interval{parse_quad(pair.at(0).get<std::string>()),
                           parse_quad(pair.at(1).get<std::string>())});
  return IntervalSet::normalize(std::move(raw));
}

Json real_verdict_to_json(const RealSwellingVerdict& v) {
  Json j;
  j["union_inclusion"] = v.union_inclusion;
  j["union_equality"] = v.union_equality;
  j["inter_inclusion"] = v.inter_inclusion;
  j["inter_equality"] = v.inter_equality;
  j["all_hold"] = v.all_hold();
  j["union_witness"] = opt_quad(v.union_witness);
  j["inter_witness"] = opt_quad(v.inter_witness);
  return j;
}

RealSwellingVerdict real_verdict_from_json(const Json& j) {
  RealSwellingVerdict v;
  v.union_inclusion = j.at("union_inclusion").get<bool>();
  v.union_equality = j.at("union_equality").get<bool>();
  v.inter_inclusion = j.at("inter_inclusion").get<bool>();
  v.inter_equality = j.at("inter_equality").get<bool>();
  v.union_witness = opt_quad_from(j.at("union_witness"));
  v.inter_witness = opt_quad_from(j.at("inter_witness"));
  return v;
}

Json quotient_to_json(const QuotientCoverage& q) {
  Json j;
  j["modulus"] = format_quad(q.modulus);
  j["covered"] = interval_set_to_json(q.covered);
  j["deficit"] = format_quad(q.deficit);
  j["full"] = q.full();
  return j;
}

Json coverage_filter_to_json(const CoverageFilter& f) {
  Json j;
  j["applicable"] = f.applicable;
  j["passes"] = f.passes;
  j["deficit_a_mod_b"] = format_quad(f.deficit_a_mod_b);
  j["deficit_b_mod_a"] = format_quad(f.deficit_b_mod_a);
  return j;
}

Json orbit_params_to_json(const OrbitParams& p) {
  Json j;
  j["A"] = interval_set_to_json(p.a_set);
  j["B"] = interval_set_to_json(p.b_set);
  j["a"] = format_quad(p.a);
  j["b"] = format_quad(p.b);
  j["x0"] = format_quad(p.x0);
  j["max_steps"] = p.max_steps;
  return j;
}

Json orbit_step_to_json(std::size_t n, const OrbitStep& st) {
  Json j;
  j["n"] = n;
  j["x"] = format_quad(st.x);
  j["s"] = step_name(st.s);
  j["inA"] = st.in_a;
  j["inB"] = st.in_b;
  return j;
}

Json gap_stats_to_json(const GapStatistics& g) {
  Json j;
  j["modulus"] = format_quad(g.modulus);
  j["distinct_points"] = g.distinct_points;
  j["max_gap"] = format_quad(g.max_gap);
  j["min_gap"] = format_quad(g.min_gap);
  Json lens = Json::array();
  for (const auto& q : g.gap_lengths) lens.push_back(format_quad(q));
  j["gap_lengths"] = std::move(lens);
  return j;
}

Json candidate_to_json(const CandidateSpec& c) {
  Json j;
  j["index"] = c.index.str();
  j["draw"] = c.draw ? Json(*c.draw) : Json(nullptr);
  j["A"] = interval_set_to_json(c.a_set);
  j["B"] = interval_set_to_json(c.b_set);
  j["a"] = format_quad(c.a);
  j["b"] = format_quad(c.b);
  j["c"] = format_quad(c.c);
  return j;
}

CandidateSpec candidate_from_json(const Json& j) {
  CandidateSpec c;
  c.index = BigInt(j.at("index").get<std::string>());
  if (!j.at("draw").is_null()) c.draw = j.at("draw").get<std::uint64_t>();
  c.a_set = interval_set_from_json(j.at("A"));
  c.b_set = interval_set_from_json(j.at("B"));
  c.a = parse_quad(j.at("a").get<std::string>());
  c.b = parse_quad(j.at("b").get<std::string>());
  c.c = parse_quad(j.at("c").get<std::string>());
  return c;
}

Json near_miss_to_json(const NearMiss& n) {
  Json j;
  j["candidate"] = candidate_to_json(n.cand);
  j["score"] = format_quad(n.score);
  j["verdict"] = real_verdict_to_json(n.verdict);
  return j;
}

NearMiss near_miss_from_json(const Json& j) {
  NearMiss n;
  n.cand = candidate_from_json(j.at("candidate"));
  n.score = parse_quad(j.at("score").get<std::string>());
  n.verdict = real_verdict_from_json(j.at("verdict"));
  return n;
}

Json counterexample_to_json(const CounterexampleRecord& r) {
  Json j;
  j["candidate"] = candidate_to_json(r.cand);
  j["verdict"] = real_verdict_to_json(r.verdict);
  return j;
}

CounterexampleRecord counterexample_from_json(const Json& j) {
  CounterexampleRecord r;
  r.cand = candidate_from_json(j.at("candidate"));
  r.verdict = real_verdict_from_json(j.at("verdict"));
  return r;
}

Json search_report_to_json(const SearchReport& r) {
  Json j;
  j["config_echo"] = format_search_config(r.config);
  j["config_hash"] = r.config_hash;
  j["grid_total"] = r.grid_total.str();
  j["candidates_generated"] = r.candidates_generated;
  Json filtered;
  for (FilterReason reason : {FilterReason::ZeroTranslation, FilterReason::RationalRatio,
                              FilterReason::MeasureTooSmall, FilterReason::CoverageDeficit}) {
    const std::string name = filter_reason_name(reason);
    auto it = r.filtered_out.find(name);
    filtered[name] = it == r.filtered_out.end() ? 0 : it->second;
  }
  j["filtered_out"] = std::move(filtered);
  j["fully_verified"] = r.fully_verified;
  j["anomalies"] = r.anomalies;
  Json cex = Json::array();
  for (const auto& rec : r.counterexamples) cex.push_back(counterexample_to_json(rec));
  j["counterexamples"] = std::move(cex);
  Json nm = Json::array();
  for (const auto& n : r.near_misses) nm.push_back(near_miss_to_json(n));
  j["near_misses"] = std::move(nm);
  j["next_index"] = r.next_index.str();
  j["complete"] = r.complete;
  return j;
}

}  // namespace swelling
