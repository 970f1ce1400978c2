#ifndef LOCALMULT_SWEEP_HPP
#define LOCALMULT_SWEEP_HPP

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "localmult/families.hpp"

namespace localmult {

struct SweepOptions {
  std::size_t samples = 30;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::size_t inject_deviated = 0;  // extra make_deviated_instance records (profile (2,1,1) only)
  unsigned max_degree = 1;          // degree of the random b_i
  CoefficientGrid grid;
  StandardBasisOptions basis;
};

struct SweepRecord {
  std::size_t index = 0;
  ExponentProfile profile;
  std::string verdict = "n/a";  // classification runs only for profile (2,1,1)
  std::optional<std::int64_t> L;
  std::optional<std::uint64_t> length_r1, length_r2;
  bool degenerate = false;
  bool injected = false;
  std::string error;  // resource cap hit; the record carries no lengths
};

inline nlohmann::json to_json(const SweepRecord& r) {
  auto opt = [](const auto& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  nlohmann::json j;
  j["index"] = r.index;
  j["profile"] = {r.profile.r1, r.profile.r2, r.profile.r3};
  j["verdict"] = r.verdict;
  j["L"] = opt(r.L);
  j["length_r1"] = opt(r.length_r1);
  j["length_r2"] = opt(r.length_r2);
  j["degenerate"] = r.degenerate;
  j["injected"] = r.injected;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

inline SweepRecord sweep_record_from_json(const nlohmann::json& j) {
  auto opt_int = [&](const char* key) -> std::optional<std::int64_t> {
    if (j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<std::int64_t>();
  };
  SweepRecord r;
  r.index = j.at("index").get<std::size_t>();
  const auto& p = j.at("profile");
  r.profile = {p.at(0).get<unsigned>(), p.at(1).get<unsigned>(), p.at(2).get<unsigned>()};
  r.verdict = j.at("verdict").get<std::string>();
  r.L = opt_int("L");
  if (auto v = opt_int("length_r1")) r.length_r1 = static_cast<std::uint64_t>(*v);
  if (auto v = opt_int("length_r2")) r.length_r2 = static_cast<std::uint64_t>(*v);
  r.degenerate = j.at("degenerate").get<bool>();
  r.injected = j.at("injected").get<bool>();
  if (j.contains("error")) r.error = j.at("error").get<std::string>();
  return r;
}

struct SweepResult {
  ExponentProfile profile;
  std::vector<SweepRecord> records;  // ordered by index
  std::map<std::int64_t, std::size_t> histogram;  // L -> count, non-degenerate records only
  std::size_t degenerate = 0;
  std::size_t errors = 0;
};

// Independent stream per record, so results do not depend on scheduling.
inline std::mt19937_64 record_stream(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

inline SweepRecord sweep_one(const ExponentProfile& profile, std::size_t index, bool injected,
                             const SweepOptions& options) {
  SweepRecord rec;
  rec.index = index;
  rec.profile = profile;
  rec.injected = injected;
  std::mt19937_64 rng = record_stream(options.seed, index);
  try {
    GSystem g = injected ? random_deviated_instance(rng, options.grid)
                         : build_g_system(profile, random_b_coefficients(rng, options.max_degree, options.grid));
    if (profile.is_jump_profile()) {
      Classification c = classify(g, options.basis);
      rec.verdict = to_string(c.verdict);
      rec.degenerate = c.verdict == Verdict::kDegenerate;
      rec.length_r1 = c.length_r1;
      rec.length_r2 = c.length_r2;
    } else {
      PairLengths lens = pair_lengths(g, options.basis);
      rec.length_r1 = lens.r1.length;
      rec.length_r2 = lens.r2.length;
    }
    if (rec.length_r1 && rec.length_r2)
      rec.L = static_cast<std::int64_t>(*rec.length_r2) - static_cast<std::int64_t>(*rec.length_r1);
    else
      rec.degenerate = true;
  } catch (const ResourceLimitExceeded& e) {
    rec.error = e.what();
  }
  return rec;
}

// Samples random b for the profile; with inject_deviated > 0 (profile
// (2,1,1) only) that many deviated instances are appended after the random
// ones, with indices continuing the sequence.
inline SweepResult sweep(const ExponentProfile& profile, const SweepOptions& options) {
  profile.validate();
  if (options.inject_deviated > 0 && !profile.is_jump_profile())
    throw std::invalid_argument("deviated instances exist only for profile (2,1,1)");
  const std::size_t total = options.samples + options.inject_deviated;
  SweepResult result;
  result.profile = profile;
  result.records.resize(total);

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < total; i = next++)
      result.records[i] = sweep_one(profile, i, i >= options.samples, options);
  };
  unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (const auto& r : result.records) {
    if (!r.error.empty())
      ++result.errors;
    else if (r.degenerate)
      ++result.degenerate;
    else
      ++result.histogram[*r.L];
  }
  return result;
}

inline std::string histogram_string(const std::map<std::int64_t, std::size_t>& h) {
  std::string out = "{";
  for (const auto& [k, v] : h) {
    if (out.size() > 1) out += ", ";
    out += std::to_string(k) + ": " + std::to_string(v);
  }
  return out + "}";
}

}  // namespace localmult

#endif  // LOCALMULT_SWEEP_HPP
