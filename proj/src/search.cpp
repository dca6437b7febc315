#include "swelling/search.hpp"

#include "swelling/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

namespace swelling {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::size_t parse_count(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw std::invalid_argument("search config: bad number for " + key + ": " + value);
  }
}

bool parse_flag(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw std::invalid_argument("search config: bad flag for " + key + ": " + value);
}

void check_range(const std::string& key, std::size_t v, std::size_t lo, std::size_t hi) {
  if (v < lo || v > hi)
    throw std::invalid_argument("search config: " + key + " must be in [" + std::to_string(lo) +
                                "," + std::to_string(hi) + "]");
}

int reason_slot(FilterReason r) {
  switch (r) {
    case FilterReason::ZeroTranslation: return 0;
    case FilterReason::RationalRatio: return 1;
    case FilterReason::MeasureTooSmall: return 2;
    case FilterReason::CoverageDeficit: return 3;
    case FilterReason::None: break;
  }
  return -1;
}

constexpr std::array<FilterReason, 4> kReasons{FilterReason::ZeroTranslation,
                                              FilterReason::RationalRatio,
                                              FilterReason::MeasureTooSmall,
                                              FilterReason::CoverageDeficit};

// Ordered endpoint pair (i <= j) from its lexicographic index.
std::pair<std::size_t, std::size_t> decode_pair(BigInt ip, std::size_t n) {
  const BigInt big_n(n);
  auto offset = [&](const BigInt& i) { return i * big_n - i * (i - 1) / 2; };
  const BigInt odd = 2 * big_n + 1;
  const BigInt disc = odd * odd - 8 * ip;
  BigInt i = (odd - boost::multiprecision::sqrt(disc)) / 2;
  while (i > 0 && offset(i) > ip) --i;
  while (offset(i + 1) <= ip) ++i;
  const BigInt j = i + (ip - offset(i));
  return {i.convert_to<std::size_t>(), j.convert_to<std::size_t>()};
}

IntervalSet decode_set(const ScalarGrid& grid, BigInt si) {
  BigInt block = grid.pair_count;
  std::size_t segments = 1;
  while (si >= block) {
    si -= block;
    block *= grid.pair_count;
    ++segments;
  }
  std::vector<BigInt> digits(segments);
  for (std::size_t d = segments; d-- > 0;) {
    digits[d] = si % grid.pair_count;
    si /= grid.pair_count;
  }
  std::vector<Interval> raw;
  raw.reserve(segments);
  for (const auto& digit : digits) {
    auto [lo, hi] = decode_pair(digit, grid.scalars.size());
    raw.push_back(Interval{grid.scalars[lo], grid.scalars[hi]});
  }
  return IntervalSet::normalize(std::move(raw));
}

bool near_miss_less(const NearMiss& x, const NearMiss& y) {
  const int c = qs_cmp(x.score, y.score);
  if (c != 0) return c < 0;
  if (x.cand.index != y.cand.index) return x.cand.index < y.cand.index;
  return x.cand.draw.value_or(0) < y.cand.draw.value_or(0);
}

struct Partial {
  std::size_t generated = 0;
  std::size_t verified = 0;
  std::size_t anomalies = 0;
  std::array<std::size_t, 4> reasons{};
  std::vector<CounterexampleRecord> counterexamples;
  std::vector<NearMiss> near_misses;
};

Json filtered_to_json(const std::map<std::string, std::size_t>& filtered) {
  Json j;
  for (FilterReason r : kReasons) {
    const std::string name = filter_reason_name(r);
    auto it = filtered.find(name);
    j[name] = it == filtered.end() ? 0 : it->second;
  }
  return j;
}

void write_checkpoint(const std::string& path, const std::string& hash, const BigInt& next,
                      const SearchReport& report) {
  Json ck;
  ck["config_hash"] = hash;
  ck["next_index"] = next.str();
  ck["candidates_generated"] = report.candidates_generated;
  ck["filtered_out"] = filtered_to_json(report.filtered_out);
  ck["fully_verified"] = report.fully_verified;
  ck["anomalies"] = report.anomalies;
  Json cex = Json::array();
  for (const auto& rec : report.counterexamples) cex.push_back(counterexample_to_json(rec));
  ck["counterexamples"] = std::move(cex);
  Json nm = Json::array();
  for (const auto& n : report.near_misses) nm.push_back(near_miss_to_json(n));
  ck["near_misses"] = std::move(nm);
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write checkpoint file " + path);
  out << ck.dump(2) << '\n';
}

}  // namespace

SearchConfig parse_search_config(std::string_view text) {
  SearchConfig cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("search config: expected key=value, got: " + stripped);
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key == "mode") {
      if (value != "grid" && value != "random")
        throw std::invalid_argument("search config: mode must be grid or random");
      cfg.mode = value;
    } else if (key == "seed") {
      cfg.seed = parse_count(key, value);
    } else if (key == "max_candidates") {
      cfg.max_candidates = parse_count(key, value);
    } else if (key == "intervals_max") {
      cfg.intervals_max = parse_count(key, value);
    } else if (key == "denominator_max") {
      cfg.denominator_max = parse_count(key, value);
    } else if (key == "magnitude_max") {
      cfg.magnitude_max = parse_count(key, value);
    } else if (key == "include_zero_translations") {
      cfg.include_zero_translations = parse_flag(key, value);
    } else if (key == "checkpoint") {
      cfg.checkpoint = value;
    } else if (key == "checkpoint_every") {
      cfg.checkpoint_every = parse_count(key, value);
    } else if (key == "stop_after") {
      cfg.stop_after = parse_count(key, value);
    } else if (key == "jobs") {
      cfg.jobs = parse_count(key, value);
    } else if (key == "near_miss_top") {
      cfg.near_miss_top = parse_count(key, value);
    } else {
      throw std::invalid_argument("search config: unknown key: " + key);
    }
  }
  check_range("intervals_max", cfg.intervals_max, 1, 4);
  check_range("denominator_max", cfg.denominator_max, 1, 64);
  check_range("magnitude_max", cfg.magnitude_max, 1, 16);
  check_range("checkpoint_every", cfg.checkpoint_every, 1, SIZE_MAX);
  check_range("jobs", cfg.jobs, 1, 256);
  check_range("near_miss_top", cfg.near_miss_top, 0, 1000);
  return cfg;
}

std::string format_search_config(const SearchConfig& cfg) {
  std::ostringstream out;
  out << "checkpoint=" << cfg.checkpoint << '\n'
      << "checkpoint_every=" << cfg.checkpoint_every << '\n'
      << "denominator_max=" << cfg.denominator_max << '\n'
      << "include_zero_translations=" << (cfg.include_zero_translations ? "true" : "false") << '\n'
      << "intervals_max=" << cfg.intervals_max << '\n'
      << "jobs=" << cfg.jobs << '\n'
      << "magnitude_max=" << cfg.magnitude_max << '\n'
      << "max_candidates=" << cfg.max_candidates << '\n'
      << "mode=" << cfg.mode << '\n'
      << "near_miss_top=" << cfg.near_miss_top << '\n'
      << "seed=" << cfg.seed << '\n'
      << "stop_after=" << cfg.stop_after << '\n';
  return out.str();
}

std::string search_config_hash(const SearchConfig& cfg) {
  std::ostringstream out;
  out << "mode=" << cfg.mode << '\n'
      << "seed=" << cfg.seed << '\n'
      << "max_candidates=" << cfg.max_candidates << '\n'
      << "intervals_max=" << cfg.intervals_max << '\n'
      << "denominator_max=" << cfg.denominator_max << '\n'
      << "magnitude_max=" << cfg.magnitude_max << '\n'
      << "include_zero_translations=" << (cfg.include_zero_translations ? "true" : "false")
      << '\n';
  return fnv1a_hex(out.str());
}

ScalarGrid build_scalar_grid(const SearchConfig& cfg) {
  std::set<Rational> rats;
  for (std::size_t q = 1; q <= cfg.denominator_max; ++q)
    for (long p = -static_cast<long>(cfg.magnitude_max); p <= static_cast<long>(cfg.magnitude_max);
         ++p)
      rats.insert(Rational(BigInt(p), BigInt(q)));

  ScalarGrid grid;
  grid.scalars.reserve(rats.size() * rats.size());
  for (const auto& u : rats)
    for (const auto& v : rats) grid.scalars.push_back(QuadScalar{u, v});
  std::sort(grid.scalars.begin(), grid.scalars.end());
  if (grid.scalars.empty()) throw std::invalid_argument("search grid is empty");

  const BigInt n(grid.scalars.size());
  grid.pair_count = n * (n + 1) / 2;
  grid.set_count = 0;
  BigInt block(1);
  for (std::size_t j = 1; j <= cfg.intervals_max; ++j) {
    block *= grid.pair_count;
    grid.set_count += block;
  }
  grid.total = grid.set_count * grid.set_count * n * n * n;
  return grid;
}

CandidateSpec decode_candidate(const ScalarGrid& grid, const BigInt& index) {
  if (index < 0 || index >= grid.total)
    throw std::invalid_argument("candidate index out of range");
  const BigInt n(grid.scalars.size());
  BigInt rest = index;
  auto take = [&rest](const BigInt& radix) {
    BigInt digit = rest % radix;
    rest /= radix;
    return digit;
  };
  const BigInt ic = take(n);
  const BigInt ib = take(n);
  const BigInt ia = take(n);
  const BigInt set_b = take(grid.set_count);
  const BigInt set_a = rest;

  CandidateSpec cand;
  cand.index = index;
  cand.a = grid.scalars[ia.convert_to<std::size_t>()];
  cand.b = grid.scalars[ib.convert_to<std::size_t>()];
  cand.c = grid.scalars[ic.convert_to<std::size_t>()];
  cand.a_set = decode_set(grid, set_a);
  cand.b_set = decode_set(grid, set_b);
  return cand;
}

BigInt random_candidate_index(const ScalarGrid& grid, std::uint64_t seed, std::uint64_t draw) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(draw), static_cast<std::uint32_t>(draw >> 32)};
  std::mt19937_64 eng(seq);
  // 512 random bits reduced mod total: bias below 2^-127 for any legal grid.
  BigInt r = 0;
  for (int word = 0; word < 8; ++word) {
    r <<= 64;
    r += BigInt(eng());
  }
  return r % grid.total;
}

std::string filter_reason_name(FilterReason r) {
  switch (r) {
    case FilterReason::None: return "none";
    case FilterReason::ZeroTranslation: return "zero-translation";
    case FilterReason::RationalRatio: return "rational-ratio-excluded";
    case FilterReason::MeasureTooSmall: return "measure-too-small";
    case FilterReason::CoverageDeficit: return "coverage-deficit";
  }
  return "none";
}

FilterDecision filter_candidate(const CandidateSpec& cand, const SearchConfig& cfg) {
  const bool any_zero = cand.a.is_zero() || cand.b.is_zero() || cand.c.is_zero();
  if (any_zero) {
    if (!cfg.include_zero_translations) return {false, FilterReason::ZeroTranslation};
    // Ratio and coverage tests assume nonzero translations; verify directly.
    return {true, FilterReason::None};
  }
  if ((cand.a / cand.b).is_rational() || (cand.a / cand.c).is_rational() ||
      (cand.b / cand.c).is_rational())
    return {false, FilterReason::RationalRatio};
  if (measure(cand.a_set) < qs_abs(cand.b) || measure(cand.b_set) < qs_abs(cand.a))
    return {false, FilterReason::MeasureTooSmall};
  if (!necessary_condition_filter(cand.a_set, cand.b_set, cand.a, cand.b).passes)
    return {false, FilterReason::CoverageDeficit};
  return {true, FilterReason::None};
}

VerifyOutcome verify_candidate(const CandidateSpec& cand) {
  VerifyOutcome out;
  out.verdict = check_swelling_real(cand.a_set, cand.b_set, cand.a, cand.b, cand.c);
  const bool claim = out.verdict.union_inclusion && out.verdict.inter_inclusion &&
                     !(out.verdict.union_equality && out.verdict.inter_equality);
  if (!claim) return out;

  // Re-verify on freshly normalized copies of the raw pieces.
  auto renorm = [](const IntervalSet& s) {
    std::vector<Interval> raw = s.pieces();
    return IntervalSet::normalize(std::move(raw));
  };
  const RealSwellingVerdict again = check_swelling_real(renorm(cand.a_set), renorm(cand.b_set),
                                                        cand.a, cand.b, cand.c);
  const bool stable = again.union_inclusion == out.verdict.union_inclusion &&
                      again.union_equality == out.verdict.union_equality &&
                      again.inter_inclusion == out.verdict.inter_inclusion &&
                      again.inter_equality == out.verdict.inter_equality;

  // Consistency witness: with the union inclusion true, the orbit iteration
  // can never leave A u B.
  bool orbit_consistent = true;
  if (!cand.a_set.empty() && !cand.a.is_zero() && !cand.b.is_zero()) {
    OrbitParams params;
    params.a_set = cand.a_set;
    params.b_set = cand.b_set;
    params.a = cand.a;
    params.b = cand.b;
    params.x0 = cand.a_set.pieces().front().lo;
    params.max_steps = 10'000;
    orbit_consistent = !run_orbit(std::move(params)).escape_index.has_value();
  }
  out.counterexample = stable && orbit_consistent;
  out.anomaly = !out.counterexample;
  return out;
}

QuadScalar near_miss_score(const CandidateSpec& cand) {
  const IntervalSet ta = translate_set(cand.a, cand.a_set);
  const IntervalSet tb = translate_set(cand.b, cand.b_set);
  const IntervalSet tuni = set_union(ta, tb);
  const IntervalSet uni = set_union(cand.a_set, cand.b_set);
  const IntervalSet tinter = set_intersection(ta, tb);
  const IntervalSet cab = translate_set(cand.c, set_intersection(cand.a_set, cand.b_set));
  const QuadScalar two{Rational(2), Rational(0)};
  const QuadScalar overflow = measure(tuni) - measure(set_intersection(tuni, uni));
  const QuadScalar inter_sym =
      measure(tinter) + measure(cab) - two * measure(set_intersection(tinter, cab));
  return overflow + inter_sym;
}

SearchReport run_search(const SearchConfig& cfg, std::size_t jobs_override) {
  const ScalarGrid grid = build_scalar_grid(cfg);
  const std::string hash = search_config_hash(cfg);
  const std::size_t job_limit = jobs_override != 0 ? jobs_override : cfg.jobs;

  SearchReport report;
  report.config = cfg;
  report.config_hash = hash;
  report.grid_total = grid.total;

  const bool random_mode = cfg.mode == "random";
  const BigInt end =
      random_mode ? BigInt(cfg.max_candidates) : std::min(BigInt(cfg.max_candidates), grid.total);

  BigInt pos = 0;
  if (!cfg.checkpoint.empty()) {
    std::ifstream in(cfg.checkpoint);
    if (in) {
      Json ck = Json::parse(in);
      if (ck.at("config_hash").get<std::string>() != hash)
        throw std::invalid_argument("checkpoint does not match this configuration");
      pos = BigInt(ck.at("next_index").get<std::string>());
      report.candidates_generated = ck.at("candidates_generated").get<std::size_t>();
      for (const auto& [key, value] : ck.at("filtered_out").items())
        report.filtered_out[key] = value.get<std::size_t>();
      report.fully_verified = ck.at("fully_verified").get<std::size_t>();
      report.anomalies = ck.at("anomalies").get<std::size_t>();
      for (const auto& e : ck.at("counterexamples"))
        report.counterexamples.push_back(counterexample_from_json(e));
      for (const auto& e : ck.at("near_misses"))
        report.near_misses.push_back(near_miss_from_json(e));
    }
  }

  BigInt run_cap = end > pos ? end - pos : BigInt(0);
  if (cfg.stop_after != 0) run_cap = std::min(run_cap, BigInt(cfg.stop_after));

  BigInt done = 0;
  while (done < run_cap) {
    const BigInt left = run_cap - done;
    const std::size_t chunk = std::min(BigInt(cfg.checkpoint_every), left).convert_to<std::size_t>();
    const std::uint64_t base = pos.convert_to<std::uint64_t>();

    const std::size_t jobs = std::max<std::size_t>(1, std::min(job_limit, chunk));
    std::vector<Partial> parts(jobs);
    auto work = [&](std::size_t w, std::uint64_t lo, std::uint64_t hi) {
      Partial& part = parts[w];
      for (std::uint64_t t = lo; t < hi; ++t) {
        CandidateSpec cand;
        if (random_mode) {
          cand = decode_candidate(grid, random_candidate_index(grid, cfg.seed, t));
          cand.draw = t;
        } else {
          cand = decode_candidate(grid, BigInt(t));
        }
        ++part.generated;
        const FilterDecision fd = filter_candidate(cand, cfg);
        if (!fd.keep) {
          ++part.reasons[static_cast<std::size_t>(reason_slot(fd.reason))];
          continue;
        }
        VerifyOutcome vo = verify_candidate(cand);
        ++part.verified;
        if (vo.anomaly) ++part.anomalies;
        if (vo.counterexample) part.counterexamples.push_back({cand, vo.verdict});
        if (cfg.near_miss_top != 0) {
          part.near_misses.push_back({cand, near_miss_score(cand), std::move(vo.verdict)});
          if (part.near_misses.size() >= 4 * (cfg.near_miss_top + 1)) {
            std::sort(part.near_misses.begin(), part.near_misses.end(), near_miss_less);
            part.near_misses.resize(cfg.near_miss_top);
          }
        }
      }
    };

    const std::uint64_t per = chunk / jobs;
    const std::uint64_t extra = chunk % jobs;
    std::vector<std::thread> threads;
    std::uint64_t cursor = base;
    for (std::size_t w = 0; w < jobs; ++w) {
      const std::uint64_t width = per + (w < extra ? 1 : 0);
      threads.emplace_back(work, w, cursor, cursor + width);
      cursor += width;
    }
    for (auto& th : threads) th.join();

    for (const auto& part : parts) {
      report.candidates_generated += part.generated;
      report.fully_verified += part.verified;
      report.anomalies += part.anomalies;
      for (std::size_t slot = 0; slot < kReasons.size(); ++slot)
        if (part.reasons[slot] != 0)
          report.filtered_out[filter_reason_name(kReasons[slot])] += part.reasons[slot];
      report.counterexamples.insert(report.counterexamples.end(), part.counterexamples.begin(),
                                    part.counterexamples.end());
      report.near_misses.insert(report.near_misses.end(), part.near_misses.begin(),
                                part.near_misses.end());
    }
    std::sort(report.near_misses.begin(), report.near_misses.end(), near_miss_less);
    if (report.near_misses.size() > cfg.near_miss_top)
      report.near_misses.resize(cfg.near_miss_top);

    pos += chunk;
    done += chunk;
    if (!cfg.checkpoint.empty()) write_checkpoint(cfg.checkpoint, hash, pos, report);
  }

  report.next_index = pos;
  report.complete = pos >= end;
  return report;
}

}  // namespace swelling
