#pragma once

#include "swelling/interval_set.hpp"
#include "swelling/orbit.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace swelling {

/// Search configuration, parsed from plain key=value text (one pair per
/// line, '#' comments). Unknown keys and out-of-range values are rejected.
struct SearchConfig {
  std::string mode = "grid";  // "grid" | "random"
  std::uint64_t seed = 0;
  std::size_t max_candidates = 100'000;
  std::size_t intervals_max = 1;     // <= 4 intervals per set
  std::size_t denominator_max = 2;   // <= 64
  std::size_t magnitude_max = 2;     // numerators bounded by this, <= 16
  bool include_zero_translations = false;
  std::string checkpoint;  // checkpoint file path; empty disables
  std::size_t checkpoint_every = 100'000;
  std::size_t stop_after = 0;  // stop this run after N candidates (0 = off)
  std::size_t jobs = 1;
  std::size_t near_miss_top = 5;

  bool operator==(const SearchConfig& o) const = default;
};

SearchConfig parse_search_config(std::string_view text);

/// Canonical key=value echo (sorted keys, normalized values).
std::string format_search_config(const SearchConfig& cfg);

/// FNV-1a hash over the keys that determine the candidate stream (mode,
/// seed, bounds, zero-translation flag, max_candidates). Operational keys
/// (jobs, checkpointing, stop_after, near_miss_top) do not affect it, so a
/// checkpoint stays valid when only those change.
std::string search_config_hash(const SearchConfig& cfg);

/// The enumerable candidate family: scalars p/q + (r/s)*sqrt2 with |p|,|r|
/// bounded by magnitude_max and q,s by denominator_max; intervals have both
/// endpoints in the scalar set; each side is a union of 1..intervals_max
/// intervals. Candidates are indexed lexicographically by
/// (A-set, B-set, a, b, c), last coordinate fastest.
struct ScalarGrid {
  std::vector<QuadScalar> scalars;  // sorted
  BigInt pair_count;                // ordered endpoint pairs lo <= hi
  BigInt set_count;                 // sum over j of pair_count^j
  BigInt total;                     // set_count^2 * scalars.size()^3
};

ScalarGrid build_scalar_grid(const SearchConfig& cfg);

struct CandidateSpec {
  BigInt index;  // grid coordinate; in random mode the drawn index
  std::optional<std::uint64_t> draw;  // random mode: draw number
  IntervalSet a_set;
  IntervalSet b_set;
  QuadScalar a;
  QuadScalar b;
  QuadScalar c;
};

CandidateSpec decode_candidate(const ScalarGrid& grid, const BigInt& index);

/// Index drawn for draw number d under the given seed; uniform on
/// [0, grid.total) up to a bias below 2^-127.
BigInt random_candidate_index(const ScalarGrid& grid, std::uint64_t seed, std::uint64_t draw);

enum class FilterReason {
  None,
  ZeroTranslation,   // some of a, b, c is zero (classical lemma territory)
  RationalRatio,     // one of a/b, a/c, b/c is rational
  MeasureTooSmall,   // measure(A) < |b| or measure(B) < |a|
  CoverageDeficit,   // projection of A mod b or B mod a misses a region
};
std::string filter_reason_name(FilterReason r);

struct FilterDecision {
  bool keep = false;
  FilterReason reason = FilterReason::None;
};

FilterDecision filter_candidate(const CandidateSpec& cand, const SearchConfig& cfg);

/// Full verification. A counterexample claim requires both inclusions true
/// and some equality false; it is then re-verified on freshly normalized
/// sets and cross-checked with the orbit iteration (which must not escape
/// when the union inclusion holds). Any disagreement flags an anomaly
/// instead of a counterexample.
struct VerifyOutcome {
  RealSwellingVerdict verdict;
  bool counterexample = false;
  bool anomaly = false;
};

VerifyOutcome verify_candidate(const CandidateSpec& cand);

/// Ranking score: measure((aA u bB) \ (A u B)) plus the measure of the
/// symmetric difference between aA n bB and c(A n B). Zero means the union
/// inclusion and the intersection equality hold exactly. Report ordering
/// only; never used for verdicts.
QuadScalar near_miss_score(const CandidateSpec& cand);

struct NearMiss {
  CandidateSpec cand;
  QuadScalar score;
  RealSwellingVerdict verdict;
};

struct CounterexampleRecord {
  CandidateSpec cand;
  RealSwellingVerdict verdict;
};

struct SearchReport {
  SearchConfig config;
  std::string config_hash;
  BigInt grid_total;
  std::size_t candidates_generated = 0;
  std::map<std::string, std::size_t> filtered_out;  // reason name -> count
  std::size_t fully_verified = 0;
  std::size_t anomalies = 0;
  std::vector<CounterexampleRecord> counterexamples;
  std::vector<NearMiss> near_misses;  // ascending (score, index)
  BigInt next_index;                  // first unprocessed index / draw
  bool complete = false;              // processed the full planned range
};

/// Runs the pipeline: enumerate (or resume from checkpoint), filter, verify,
/// rank. Deterministic for a fixed config, independent of jobs. Throws
/// std::invalid_argument on bad config or on a checkpoint whose hash does
/// not match. jobs_override (nonzero) replaces cfg.jobs without touching the
/// echoed config, so reports stay byte-identical across worker counts.
SearchReport run_search(const SearchConfig& cfg, std::size_t jobs_override = 0);

}  // namespace swelling
