#ifndef LOCALMULT_VERIFY_HPP
#define LOCALMULT_VERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "localmult/families.hpp"
#include "localmult/instance.hpp"
#include "localmult/parse.hpp"
#include "localmult/sweep.hpp"

namespace localmult {

inline constexpr const char* kEngineVersion = "localmult 1.0.0";

enum class Provenance { kPaper, kTrivial, kDerived };

inline std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::kPaper: return "PAPER";
    case Provenance::kTrivial: return "TRIVIAL";
    case Provenance::kDerived: return "DERIVED";
  }
  return "?";
}

// One checked value. `group` ties the case to an acceptance criterion.
struct VerificationCase {
  std::string id;
  std::string anchor;
  std::string builder;
  int group = 0;
  Provenance provenance = Provenance::kPaper;
  nlohmann::json expected;
  nlohmann::json computed = {};
  bool pass = false;
  std::string note = {};
};

struct Report {
  std::string suite;
  std::string engine_version = kEngineVersion;
  std::uint64_t seed = 0;
  std::vector<VerificationCase> cases;

  std::size_t passed() const {
    std::size_t n = 0;
    for (const auto& c : cases) n += c.pass;
    return n;
  }
  std::size_t failed() const { return cases.size() - passed(); }
  bool all_pass() const { return failed() == 0; }
};

inline nlohmann::json to_json(const VerificationCase& c) {
  return {{"id", c.id},
          {"anchor", c.anchor},
          {"builder", c.builder},
          {"group", c.group},
          {"provenance", to_string(c.provenance)},
          {"expected", c.expected},
          {"computed", c.computed},
          {"pass", c.pass},
          {"note", c.note}};
}

inline VerificationCase verification_case_from_json(const nlohmann::json& j) {
  VerificationCase c;
  c.id = j.at("id").get<std::string>();
  c.anchor = j.at("anchor").get<std::string>();
  c.builder = j.at("builder").get<std::string>();
  c.group = j.at("group").get<int>();
  std::string p = j.at("provenance").get<std::string>();
  c.provenance = p == "PAPER" ? Provenance::kPaper : p == "TRIVIAL" ? Provenance::kTrivial : Provenance::kDerived;
  c.expected = j.at("expected");
  c.computed = j.at("computed");
  c.pass = j.at("pass").get<bool>();
  c.note = j.at("note").get<std::string>();
  return c;
}

inline nlohmann::json to_json(const Report& r) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : r.cases) cases.push_back(to_json(c));
  return {{"suite", r.suite},
          {"engine_version", r.engine_version},
          {"seed", r.seed},
          {"cases", cases},
          {"summary", {{"total", r.cases.size()}, {"passed", r.passed()}, {"failed", r.failed()}}}};
}

inline Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.suite = j.at("suite").get<std::string>();
  r.engine_version = j.at("engine_version").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& c : j.at("cases")) r.cases.push_back(verification_case_from_json(c));
  return r;
}

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t instances = 10;      // per coefficient family
  std::size_t sweep_samples = 30;  // per profile
  std::size_t injected = 5;        // deviated instances added to the (2,1,1) sweep
  unsigned jobs = 1;
  StandardBasisOptions basis;
};

namespace detail {

inline nlohmann::json delta_json(std::uint64_t total, std::uint64_t a, std::uint64_t b) {
  return nlohmann::json::array({total, a, b});
}

// Runs `compute`; a thrown error becomes the computed value and fails the case.
inline void run_case(Report& report, VerificationCase c, const std::function<nlohmann::json()>& compute) {
  try {
    c.computed = compute();
    c.pass = c.computed == c.expected;
  } catch (const std::exception& e) {
    c.computed = std::string("error: ") + e.what();
    c.pass = false;
  }
  report.cases.push_back(std::move(c));
}

inline std::mt19937_64 group_stream(std::uint64_t seed, std::uint64_t group) { return record_stream(seed, 1000 + group); }

}  // namespace detail

// Coefficient-level delta cases (groups 1-3).
inline void verify_singular_point(Report& report, const VerifyOptions& o) {
  std::mt19937_64 rng = detail::group_stream(o.seed, 1);
  const ChartSample z1{Rational(3), Rational(7)}, z2{Rational(-5), Rational(2)};

  for (std::size_t k = 0; k < o.instances; ++k) {
    SingularityCoefficients c = random_coefficients(rng, 1);
    std::string tag = "#" + std::to_string(k);
    Delta1Record d1;
    Delta2Record d2;
    detail::run_case(report,
                     {"delta1.generic" + tag, "delta1 at the m=1 point, non-deviated", "delta1_at_p0", 1,
                      Provenance::kPaper, detail::delta_json(6, 3, 3)},
                     [&] {
                       d1 = delta1_at_p0(c, o.basis);
                       return detail::delta_json(d1.total, d1.part_mod_y, d1.part_y);
                     });
    detail::run_case(report,
                     {"delta2.generic" + tag, "vertical cycle at the m=1 point, non-deviated", "delta2_at_p0", 2,
                      Provenance::kPaper, detail::delta_json(6, 2, 4)},
                     [&] {
                       d2 = delta2_at_p0(c, {z1, z2}, o.basis);
                       return detail::delta_json(d2.total, d2.part_I4, d2.part_I5);
                     });
    detail::run_case(report,
                     {"obstruction.generic" + tag, "I(b,p0) for a non-deviated surface", "obstruction_I_at_p0", 3,
                      Provenance::kPaper, 0},
                     [&] { return obstruction_I_at_p0(d1, d2); });
    detail::run_case(report,
                     {"obstruction.generic.consistency" + tag, "I(b,p0) = L(b) - 1", "obstruction_I_at_p0", 3,
                      Provenance::kPaper, true},
                     [&] {
                       return obstruction_I_at_p0(d1, d2) ==
                              multiplicity_pair_L(g_system_from_coefficients(c), o.basis) - 1;
                     });
  }

  // Deviated coefficient instances exist only with a1, a4, a8 vanishing at the
  // origin; the unit hypothesis behind the expected values is then violated.
  std::mt19937_64 dev_rng = detail::group_stream(o.seed, 2);
  std::size_t made = 0, skipped = 0;
  while (made < o.instances && skipped < 4 * o.instances) {
    SingularityCoefficients c = deviated_boundary_coefficients(dev_rng, 1);
    Delta1Record d1;
    Delta2Record d2;
    try {
      d1 = delta1_at_p0(c, o.basis);
      d2 = delta2_at_p0(c, {z1, z2}, o.basis);
    } catch (const ResourceLimitExceeded&) {
      ++skipped;
      continue;
    }
    std::string tag = "#" + std::to_string(made++);
    const std::string note = "coefficient instance with a1(0) = a4(0) = a8(0) = 0";
    detail::run_case(report,
                     {"delta1.deviated" + tag, "delta1 at the m=1 point, deviated", "delta1_at_p0", 1,
                      Provenance::kPaper, detail::delta_json(7, 3, 4), {}, false, note},
                     [&] { return detail::delta_json(d1.total, d1.part_mod_y, d1.part_y); });
    detail::run_case(report,
                     {"delta2.deviated" + tag, "vertical cycle at the m=1 point, deviated", "delta2_at_p0", 2,
                      Provenance::kPaper, detail::delta_json(8, 2, 6), {}, false, note},
                     [&] { return detail::delta_json(d2.total, d2.part_I4, d2.part_I5); });
    detail::run_case(report,
                     {"obstruction.deviated" + tag, "I(b,p0) for a deviated surface", "obstruction_I_at_p0", 3,
                      Provenance::kPaper, 1, {}, false, note},
                     [&] { return obstruction_I_at_p0(d1, d2); });
    detail::run_case(report,
                     {"obstruction.deviated.consistency" + tag, "I(b,p0) = L(b) - 1", "obstruction_I_at_p0", 3,
                      Provenance::kPaper, true, {}, false, note},
                     [&] {
                       return obstruction_I_at_p0(d1, d2) ==
                              multiplicity_pair_L(g_system_from_coefficients(c), o.basis) - 1;
                     });
  }
  if (made < o.instances)
    detail::run_case(report,
                     {"deviated.sampling", "deviated coefficient instances with certified lengths", "delta1_at_p0", 1,
                      Provenance::kDerived, o.instances},
                     [&] { return made; });

  // The jumping factors on normal-form instances: the parts carried by R1 and R2.
  std::mt19937_64 nf_rng = detail::group_stream(o.seed, 3);
  for (std::size_t k = 0; k < o.instances; ++k) {
    GSystem g = random_deviated_instance(nf_rng);
    std::string tag = "#" + std::to_string(k);
    PairLengths lens;
    detail::run_case(report,
                     {"delta1.deviated.R1" + tag, "length of R1 for a deviated normal form", "make_deviated_instance", 1,
                      Provenance::kPaper, 4},
                     [&] {
                       lens = pair_lengths(g, o.basis);
                       return finite_length(lens.r1, "R1");
                     });
    detail::run_case(report,
                     {"delta2.deviated.R2" + tag, "length of R2 for a deviated normal form", "make_deviated_instance", 2,
                      Provenance::kPaper, 6},
                     [&] { return finite_length(lens.r2, "R2"); });
    detail::run_case(report,
                     {"multiplicity.deviated" + tag, "L(b) for a deviated normal form", "multiplicity_pair_L", 3,
                      Provenance::kPaper, 2},
                     [&] { return multiplicity_pair_L(lens); });
  }
}

// Crossing points and the vertical component (groups 4-5).
inline void verify_crossings(Report& report, const VerifyOptions& o) {
  std::mt19937_64 rng = detail::group_stream(o.seed, 4);
  const PolyRing& R = crossing_ring();
  for (unsigned r : {2u, 3u, 5u}) {
    nlohmann::json basis = r == 2 ? nlohmann::json::array({"1", "t", "t^2"}) : nlohmann::json::array({"1", "t", "theta0"});
    for (std::size_t k = 0; k < o.instances; ++k) {
      std::array<Polynomial, 5> b{sample_unit(rng, R, 1), sample_unit(rng, R, 1), sample_unit(rng, R, 1),
                                  sample_unit(rng, R, 1), sample_unit(rng, R, 1)};
      detail::run_case(report,
                       {"crossing.r" + std::to_string(r) + "#" + std::to_string(k),
                        "crossing point meets s = theta0^3", "cbb_length", 4, Provenance::kPaper,
                        {{"length", 3}, {"basis", basis}}},
                       [&] {
                         LengthReport lr = cbb_length(r, b, o.basis);
                         std::vector<std::string> strings = lr.basis_strings();
                         std::sort(strings.begin(), strings.end());
                         nlohmann::json sorted_basis = strings;
                         return nlohmann::json{{"length", lr.length ? nlohmann::json(*lr.length) : "infinite"},
                                               {"basis", sorted_basis}};
                       });
    }
  }
  detail::run_case(report,
                   {"vertical.multiplicity", "vertical component over a crossing", "vertical_multiplicity", 5,
                    Provenance::kPaper, 4},
                   [&] { return finite_length(vertical_multiplicity(4, 1), "vertical component"); });
}

// Count bookkeeping away from p0 (group 6).
inline void verify_ledger(Report& report, const VerifyOptions& o) {
  detail::run_case(report,
                   {"ledger.symbolic", "delta2 sum - delta1 sum = closed form", "ledger_identity_residual", 6,
                    Provenance::kPaper, "0"},
                   [&] { return ledger_identity_residual().to_string(); });
  std::mt19937_64 rng = detail::group_stream(o.seed, 6);
  std::uniform_int_distribution<std::int64_t> count(0, 50);
  std::size_t consistent = 0;
  const std::size_t tuples = 100;
  for (std::size_t k = 0; k < tuples; ++k) {
    LedgerCounts c;
    c.i1 = c.j1 = count(rng);
    c.i2 = count(rng);
    c.j2 = count(rng);
    c.n0 = count(rng);
    c.k = count(rng);
    consistent += ledger(c).consistent;
  }
  detail::run_case(report,
                   {"ledger.random", "delta2 sum - delta1 sum = closed form on random counts", "ledger", 6,
                    Provenance::kPaper, tuples},
                   [&] { return consistent; });
}

// Multiplicity-pair sweeps (groups 7-8).
inline void verify_sweeps(Report& report, const VerifyOptions& o) {
  SweepOptions so;
  so.samples = o.sweep_samples;
  so.seed = o.seed;
  so.jobs = o.jobs;
  so.basis = o.basis;
  const std::vector<ExponentProfile> constant_profiles{{1, 1, 1}, {2, 2, 1}, {3, 3, 1}, {2, 1, 0}, {3, 2, 0}};
  for (const auto& p : constant_profiles) {
    nlohmann::json expected = {{std::to_string(p.r2), o.sweep_samples}};
    detail::run_case(report,
                     {"sweep" + p.to_string(), p.r3 == 1 ? "L(b) constant for (r,r,1)" : "L(b) constant for (r1,r2,0)",
                      "sweep", 7, Provenance::kPaper, expected, {}, false,
                      "empirical: the constancy claim is stated without proof"},
                     [&] {
                       SweepResult r = sweep(p, so);
                       nlohmann::json h = nlohmann::json::object();
                       for (const auto& [k, v] : r.histogram) h[std::to_string(k)] = v;
                       if (r.degenerate) h["degenerate"] = r.degenerate;
                       if (r.errors) h["errors"] = r.errors;
                       return h;
                     });
  }
  so.inject_deviated = o.injected;
  detail::run_case(report,
                   {"sweep(2,1,1)", "L(b) not constant for (2,1,1)", "sweep", 8, Provenance::kPaper,
                    {{"1", o.sweep_samples}, {"2", o.injected}}},
                   [&] {
                     SweepResult r = sweep({2, 1, 1}, so);
                     nlohmann::json h = nlohmann::json::object();
                     for (const auto& [k, v] : r.histogram) h[std::to_string(k)] = v;
                     if (r.degenerate) h["degenerate"] = r.degenerate;
                     if (r.errors) h["errors"] = r.errors;
                     return h;
                   });
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline nlohmann::json length_json(const LengthReport& r) {
  return r.length ? nlohmann::json(*r.length) : nlohmann::json("infinite");
}

// Expected values stored in fixture files (group 0). `*.ideal` files carry
// expect_length (and optionally expect_ideal naming the ideal); both engines
// must agree with it. `*.inst` files carry expect_verdict and/or expect_L.
inline void verify_fixtures(Report& report, const std::filesystem::path& dir, const VerifyOptions& o) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && (entry.path().extension() == ".ideal" || entry.path().extension() == ".inst"))
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    const std::string name = path.filename().string();
    std::string text;
    try {
      text = read_text_file(path);
    } catch (const std::exception& e) {
      report.cases.push_back({"fixture:" + name, "fixture file", "read", 0, Provenance::kTrivial, "readable",
                              std::string("error: ") + e.what(), false, ""});
      continue;
    }
    if (path.extension() == ".ideal") {
      std::optional<IdealFile> file;
      detail::run_case(report, {"fixture:" + name + ":parse", "fixture file", "parse_ideal_file", 0,
                                Provenance::kTrivial, true},
                       [&] {
                         file = parse_ideal_file(text);
                         return true;
                       });
      if (!file) continue;
      auto it = file->expectations.find("length");
      if (it == file->expectations.end()) continue;
      nlohmann::json exp = it->second == "infinite" ? nlohmann::json("infinite")
                                                    : nlohmann::json(std::stoull(it->second));
      // The named ideal, or the sum of all ideals in the file.
      auto sel = file->expectations.find("ideal");
      Ideal sum = file->ideals.front().second;
      for (std::size_t k = 1; k < file->ideals.size(); ++k) sum = sum + file->ideals[k].second;
      const Ideal* ideal = &sum;
      if (sel != file->expectations.end())
        for (const auto& [n, I] : file->ideals)
          if (n == sel->second) ideal = &I;
      detail::run_case(report, {"fixture:" + name + ":stdbasis", "fixture file", "local_length", 0,
                                Provenance::kTrivial, exp},
                       [&] { return length_json(local_length(*ideal, o.basis)); });
      if (exp.is_number())
        detail::run_case(report, {"fixture:" + name + ":oracle", "fixture file", "truncation_length_oracle", 0,
                                  Provenance::kTrivial, exp},
                         [&] {
                           LengthReport r = truncation_length_oracle(*ideal);
                           if (!r.stable) throw ResourceLimitExceeded(r.caveat);
                           return length_json(r);
                         });
    } else {
      std::optional<Instance> inst;
      detail::run_case(report, {"fixture:" + name + ":parse", "fixture file", "parse_instance", 0,
                                Provenance::kTrivial, true},
                       [&] {
                         inst = parse_instance(text);
                         return true;
                       });
      if (!inst) continue;
      std::optional<Classification> cls;
      auto classified = [&]() -> const Classification& {
        if (!cls) cls = classify(inst->g, o.basis);
        return *cls;
      };
      if (auto it = inst->expectations.find("verdict"); it != inst->expectations.end())
        detail::run_case(report, {"fixture:" + name + ":verdict", "fixture file", "classify", 0,
                                  Provenance::kPaper, it->second},
                         [&] { return to_string(classified().verdict); });
      if (auto it = inst->expectations.find("L"); it != inst->expectations.end())
        detail::run_case(report, {"fixture:" + name + ":L", "fixture file", "multiplicity_pair_L", 0,
                                  Provenance::kPaper, std::stoll(it->second)},
                         [&]() -> nlohmann::json {
                           const Classification& c = classified();
                           if (!c.length_r1 || !c.length_r2) return "infinite";
                           return static_cast<std::int64_t>(*c.length_r2) - static_cast<std::int64_t>(*c.length_r1);
                         });
    }
  }
}

// Generated cases plus, when `fixture_dir` is set, the cases stored there.
inline Report verify_paper(const VerifyOptions& o = {}, const std::optional<std::filesystem::path>& fixture_dir = {}) {
  Report report;
  report.suite = "verify-paper";
  report.seed = o.seed;
  if (fixture_dir) verify_fixtures(report, *fixture_dir, o);
  verify_singular_point(report, o);
  verify_crossings(report, o);
  verify_ledger(report, o);
  verify_sweeps(report, o);
  return report;
}

}  // namespace localmult

#endif  // LOCALMULT_VERIFY_HPP
