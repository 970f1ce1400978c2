// localmult: lengths of local rings and the multiplicity-pair computations.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "localmult/families.hpp"
#include "localmult/instance.hpp"
#include "localmult/local_length.hpp"
#include "localmult/parse.hpp"
#include "localmult/sweep.hpp"
#include "localmult/verify.hpp"

#ifndef LOCALMULT_FIXTURE_DIR
#define LOCALMULT_FIXTURE_DIR ""
#endif

namespace {

using namespace localmult;

enum ExitCode { kOk = 0, kMismatch = 1, kInputError = 2, kResource = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string engine = "stdbasis";
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::string json_path;
  std::size_t max_pairs = StandardBasisOptions{}.max_pairs;
  std::uint64_t nmax = 24;

  StandardBasisOptions basis() const {
    StandardBasisOptions o;
    o.max_pairs = max_pairs;
    return o;
  }
};

std::string location(const std::string& text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

std::string read_input(const std::string& path) {
  try {
    return read_text_file(path);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

void write_json(const std::string& path, const nlohmann::json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << "\n";
}

std::string length_string(const LengthReport& r) { return r.length ? std::to_string(*r.length) : "infinite"; }

int cmd_length(const std::string& path, const std::string& ideal_name, const Common& c) {
  std::string text = read_input(path);
  IdealFile file = [&] {
    try {
      return parse_ideal_file(text);
    } catch (const ParseError& e) {
      throw InputError(path + ":" + location(text, e.position()) + ": " + e.what());
    }
  }();

  std::optional<Ideal> ideal, rest;
  std::string label;
  if (!ideal_name.empty()) {
    for (const auto& [n, I] : file.ideals)
      if (n == ideal_name) ideal = I, label = n;
    if (!ideal) throw InputError("no ideal named '" + ideal_name + "' in " + path);
  } else {
    ideal = file.ideals.front().second;
    label = file.ideals.front().first;
    for (std::size_t k = 1; k < file.ideals.size(); ++k) {
      rest = rest ? *rest + file.ideals[k].second : file.ideals[k].second;
      label += "+" + file.ideals[k].first;
    }
  }

  nlohmann::json out{{"command", "length"}, {"file", path}, {"ideal", label}, {"engine", c.engine}};
  int code = kOk;
  std::optional<LengthReport> sb, oracle;
  if (c.engine == "stdbasis" || c.engine == "both") {
    sb = rest ? sum_length(*ideal, *rest, c.basis()) : local_length(*ideal, c.basis());
    std::cout << label << ": length " << length_string(*sb) << " (standard basis)\n";
    if (sb->finite()) {
      std::cout << "  basis:";
      for (const auto& s : sb->basis_strings()) std::cout << " " << s;
      std::cout << "\n";
    }
    if (!sb->caveat.empty()) std::cout << "  note: " << sb->caveat << "\n";
    out["stdbasis"] = to_json(*sb);
  }
  if (c.engine == "oracle" || c.engine == "both") {
    oracle = truncation_length_oracle(rest ? *ideal + *rest : *ideal, c.nmax);
    std::cout << label << ": length " << (oracle->stable ? length_string(*oracle) : "undetermined")
              << " (truncation oracle";
    if (!oracle->stable) std::cout << ", " << oracle->caveat;
    std::cout << ")\n";
    out["oracle"] = to_json(*oracle);
    if (!oracle->stable && !(sb && !sb->finite())) code = kResource;
  }
  if (sb && oracle && oracle->stable) {
    bool agree = sb->length == oracle->length;
    out["agree"] = agree;
    std::cout << "engines " << (agree ? "agree" : "DISAGREE") << "\n";
    if (!agree) code = kMismatch;
  }
  if (auto it = file.expectations.find("length"); it != file.expectations.end()) {
    const LengthReport& r = sb ? *sb : *oracle;
    bool ok = (r.stable || r.source == LengthSource::kStandardBasis) && length_string(r) == it->second;
    out["expected"] = it->second;
    out["pass"] = ok;
    std::cout << "expected " << it->second << ": " << (ok ? "pass" : "FAIL") << "\n";
    if (!ok && code == kOk) code = kMismatch;
  }
  write_json(c.json_path, out);
  return code;
}

int cmd_classify(const std::string& path, const Common& c) {
  std::string text = read_input(path);
  Instance inst = [&] {
    try {
      return parse_instance(text);
    } catch (const ParseError& e) {
      throw InputError(path + ":" + location(text, e.position()) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      throw InputError(path + ": " + e.what());
    }
  }();
  if (!inst.g.profile.is_jump_profile())
    throw InputError(path + ": classification needs profile (2,1,1), got " + inst.g.profile.to_string());

  Classification cls = classify(inst.g, c.basis());
  nlohmann::json out{{"command", "classify"}, {"file", path}, {"verdict", to_string(cls.verdict)}};
  std::cout << "verdict: " << to_string(cls.verdict) << "\n";
  std::cout << "common factor of quadratic parts: " << cls.common_factor.to_string() << "\n";
  auto len = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string("infinite"); };
  std::cout << "length R1: " << len(cls.length_r1) << "\nlength R2: " << len(cls.length_r2) << "\n";
  out["common_factor"] = cls.common_factor.to_string();
  out["length_r1"] = cls.length_r1 ? nlohmann::json(*cls.length_r1) : nlohmann::json("infinite");
  out["length_r2"] = cls.length_r2 ? nlohmann::json(*cls.length_r2) : nlohmann::json("infinite");
  std::optional<std::int64_t> L;
  if (cls.length_r1 && cls.length_r2) {
    L = static_cast<std::int64_t>(*cls.length_r2) - static_cast<std::int64_t>(*cls.length_r1);
    std::cout << "L(b): " << *L << "\n";
  }
  out["L"] = L ? nlohmann::json(*L) : nlohmann::json(nullptr);

  int code = kOk;
  if (auto it = inst.expectations.find("verdict"); it != inst.expectations.end()) {
    bool ok = it->second == to_string(cls.verdict);
    std::cout << "expected verdict " << it->second << ": " << (ok ? "pass" : "FAIL") << "\n";
    if (!ok) code = kMismatch;
  }
  if (auto it = inst.expectations.find("L"); it != inst.expectations.end()) {
    bool ok = L && std::to_string(*L) == it->second;
    std::cout << "expected L " << it->second << ": " << (ok ? "pass" : "FAIL") << "\n";
    if (!ok) code = kMismatch;
  }
  out["pass"] = code == kOk;
  write_json(c.json_path, out);
  return code;
}

int cmd_verify(const std::string& fixture_dir, std::size_t instances, const Common& c) {
  VerifyOptions o;
  o.seed = c.seed;
  o.jobs = c.jobs;
  o.basis = c.basis();
  o.instances = instances;
  std::optional<std::filesystem::path> dir;
  if (!fixture_dir.empty()) {
    if (!std::filesystem::is_directory(fixture_dir)) throw InputError("no fixture directory " + fixture_dir);
    dir = fixture_dir;
  }
  Report r = verify_paper(o, dir);
  for (const auto& k : r.cases) {
    std::cout << (k.pass ? "PASS " : "FAIL ") << k.id << "  [" << to_string(k.provenance) << "] " << k.anchor;
    if (!k.pass) std::cout << "\n     expected " << k.expected.dump() << ", computed " << k.computed.dump();
    if (!k.pass && !k.note.empty()) std::cout << "\n     note: " << k.note;
    std::cout << "\n";
  }
  std::cout << r.passed() << " of " << r.cases.size() << " cases pass (seed " << r.seed << ")\n";
  write_json(c.json_path, to_json(r));
  return r.all_pass() ? kOk : kMismatch;
}

int cmd_sweep(const ExponentProfile& profile, std::size_t samples, std::size_t inject, const std::string& output,
              const Common& c) {
  try {
    profile.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (inject > 0 && !profile.is_jump_profile()) throw InputError("--inject-deviated needs profile (2,1,1)");
  SweepOptions o;
  o.samples = samples;
  o.seed = c.seed;
  o.jobs = c.jobs;
  o.inject_deviated = inject;
  o.basis = c.basis();
  SweepResult r = sweep(profile, o);
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) throw InputError("cannot write " + output);
    for (const auto& rec : r.records) out << to_json(rec).dump() << "\n";
  }
  std::cout << "profile " << profile.to_string() << ", " << samples << " samples";
  if (inject) std::cout << " + " << inject << " deviated";
  std::cout << "\nL(b) histogram: " << histogram_string(r.histogram) << "\n";
  if (r.degenerate) std::cout << "degenerate: " << r.degenerate << "\n";
  if (r.errors) std::cout << "resource cap hit: " << r.errors << "\n";
  nlohmann::json h = nlohmann::json::object();
  for (const auto& [k, v] : r.histogram) h[std::to_string(k)] = v;
  write_json(c.json_path, {{"command", "sweep"},
                           {"profile", {profile.r1, profile.r2, profile.r3}},
                           {"seed", c.seed},
                           {"histogram", h},
                           {"degenerate", r.degenerate},
                           {"errors", r.errors}});
  return r.errors ? kResource : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lengths of local rings at the origin and multiplicity-pair checks"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--engine", common.engine, "Length engine")
        ->check(CLI::IsMember({"stdbasis", "oracle", "both"}));
    sub->add_option("--seed", common.seed, "Seed for sampled coefficients");
    sub->add_option("--jobs", common.jobs, "Worker threads (sweeps)")->check(CLI::Range(1u, 256u));
    sub->add_option("--json", common.json_path, "Write a machine-readable report here");
    sub->add_option("--max-pairs", common.max_pairs, "Standard-basis pair cap");
    sub->add_option("--nmax", common.nmax, "Truncation oracle degree cap");
  };

  std::string length_file, ideal_name;
  auto* length = app.add_subcommand("length", "Length of an ideal file's local ring");
  length->add_option("file", length_file, "Ideal file")->required();
  length->add_option("--ideal", ideal_name, "Use only this ideal (default: sum of all ideals in the file)");
  add_common(length);

  std::string instance_file;
  auto* cls = app.add_subcommand("classify", "Deviated / non-deviated verdict of an instance file");
  cls->add_option("file", instance_file, "Instance file")->required();
  add_common(cls);

  std::string fixture_dir = LOCALMULT_FIXTURE_DIR;
  std::size_t instances = 10;
  auto* verify = app.add_subcommand("verify-paper", "Run the verification suite");
  verify->add_option("--fixtures", fixture_dir, "Fixture directory (empty string skips fixtures)");
  verify->add_option("--instances", instances, "Random instances per coefficient family");
  add_common(verify);

  ExponentProfile profile;
  std::size_t samples = 30, inject = 0;
  std::string output;
  auto* sw = app.add_subcommand("sweep", "Histogram of L(b) over random instances of a profile");
  sw->add_option("--r1", profile.r1)->required();
  sw->add_option("--r2", profile.r2)->required();
  sw->add_option("--r3", profile.r3)->required();
  sw->add_option("-n,--samples", samples, "Random instances");
  sw->add_option("--inject-deviated", inject, "Deviated normal-form instances to append");
  sw->add_option("--output", output, "Line-delimited JSON records");
  add_common(sw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*length) return cmd_length(length_file, ideal_name, common);
    if (*cls) return cmd_classify(instance_file, common);
    if (*verify) return cmd_verify(fixture_dir, instances, common);
    if (*sw) return cmd_sweep(profile, samples, inject, output, common);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ResourceLimitExceeded& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const InfiniteLength& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kInputError;
}
