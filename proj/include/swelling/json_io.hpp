#pragma once

#include "swelling/coset.hpp"
#include "swelling/orbit.hpp"
#include "swelling/search.hpp"
#include "swelling/sweep.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace swelling {

/// Insertion-ordered JSON keeps report fields in a stable, readable order.
using Json = nlohmann::ordered_json;

inline constexpr char kToolVersion[] = "0.1.0";

/// Provenance block embedded in every JSON report. Timestamps are the only
/// non-deterministic fields; determinism checks mask them.
struct RunManifest {
  std::string command;
  std::vector<std::string> argv;
  std::string config_hash;  // empty when the command takes no config
  std::uint64_t seed = 0;
  std::string version = kToolVersion;
  std::string started_at;
  std::string finished_at;
};

std::string iso8601_now();
std::string fnv1a_hex(std::string_view data);

Json manifest_to_json(const RunManifest& m);

// Finite-group reports.
Json verdict_to_json(const GroupDescriptor& g, const SwellingVerdict& v);
Json chain_to_json(const CardinalityChainReport& r);
Json lemma_check_to_json(const GroupDescriptor& g, const SwellingLemmaCheck& r);
Json sweep_to_json(const DenseGroup& dg, const SweepSummary& s);
Json coset_bound_to_json(const CosetBoundReport& r);
Json coset_report_to_json(const GroupDescriptor& g, const CosetCountReport& r);
Json inequality_report_to_json(const GroupDescriptor& g, const InequalityChainReport& r);

// Interval reports. Interval sets serialize as arrays of [lo, hi] endpoint
// strings in canonical scalar syntax.
Json interval_set_to_json(const IntervalSet& s);
IntervalSet interval_set_from_json(const Json& j);
Json real_verdict_to_json(const RealSwellingVerdict& v);
RealSwellingVerdict real_verdict_from_json(const Json& j);
Json quotient_to_json(const QuotientCoverage& q);
Json coverage_filter_to_json(const CoverageFilter& f);

// Orbit pieces (the trace itself streams as JSONL, one step per line).
Json orbit_params_to_json(const OrbitParams& p);
Json orbit_step_to_json(std::size_t n, const OrbitStep& st);
Json gap_stats_to_json(const GapStatistics& g);

// Search pipeline and its checkpoint state.
Json candidate_to_json(const CandidateSpec& c);
CandidateSpec candidate_from_json(const Json& j);
Json near_miss_to_json(const NearMiss& n);
NearMiss near_miss_from_json(const Json& j);
Json counterexample_to_json(const CounterexampleRecord& r);
CounterexampleRecord counterexample_from_json(const Json& j);
Json search_report_to_json(const SearchReport& r);

}  // namespace swelling
