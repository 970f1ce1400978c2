// Runs the localmult binary; paths come from the build.
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"
#include "localmult/verify.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = LOCALMULT_CLI_PATH;
const fs::path kFixtures = LOCALMULT_FIXTURE_DIR;
const fs::path kData = LOCALMULT_TEST_DATA_DIR;

int run(const std::string& args) {
  int status = std::system((kCli + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("localmult_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(Cli, LengthExitCodes) {
  EXPECT_EQ(run("length " + q(kFixtures / "tangency.ideal") + " --engine both"), 0);
  EXPECT_EQ(run("length " + q(kFixtures / "line.ideal")), 0);
  EXPECT_EQ(run("length " + q(kFixtures / "line.ideal") + " --engine oracle --nmax 8"), 3);
  EXPECT_EQ(run("length " + q(kData / "bad_syntax.ideal")), 2);
  EXPECT_EQ(run("length /nonexistent/file.ideal"), 2);
  EXPECT_EQ(run("length " + q(kFixtures / "tangency.ideal") + " --engine bogus"), 2);
  fs::path wrong = scratch("wrong.ideal");
  write(wrong, "ring P[x, y] local;\nideal I = x^2, y^2;\nexpect_length = 5;\n");
  EXPECT_EQ(run("length " + q(wrong)), 1);
}

TEST(Cli, ClassifyExitCodes) {
  EXPECT_EQ(run("classify " + q(kFixtures / "deviated_normal_form.inst")), 0);
  EXPECT_EQ(run("classify " + q(kFixtures / "shared_factor.inst")), 0);
  EXPECT_EQ(run("classify " + q(kData / "corrupted_deviated.inst")), 2);
  EXPECT_EQ(run("classify " + q(kData / "wrong_profile.inst")), 2);
  fs::path wrong = scratch("wrong.inst");
  write(wrong, "ring P[t, theta0, y] local;\nu1 = 3; u2 = 2; u3 = 5;\nexpect_verdict = NonDeviated;\n");
  EXPECT_EQ(run("classify " + q(wrong)), 1);
}

TEST(Cli, ClassifyJson) {
  fs::path out = scratch("classify.json");
  ASSERT_EQ(run("classify " + q(kFixtures / "generic_coefficients.inst") + " --json " + q(out)), 0);
  auto j = nlohmann::json::parse(std::ifstream(out));
  EXPECT_EQ(j["verdict"], "NonDeviated");
  EXPECT_EQ(j["L"], 1);
}

TEST(Cli, SweepIsByteIdenticalAcrossJobs) {
  fs::path a = scratch("a.jsonl"), b = scratch("b.jsonl");
  ASSERT_EQ(run("sweep --r1 2 --r2 1 --r3 1 -n 12 --inject-deviated 2 --seed 5 --jobs 1 --output " + q(a)), 0);
  ASSERT_EQ(run("sweep --r1 2 --r2 1 --r3 1 -n 12 --inject-deviated 2 --seed 5 --jobs 3 --output " + q(b)), 0);
  EXPECT_EQ(localmult::read_text_file(a), localmult::read_text_file(b));
  EXPECT_EQ(run("sweep --r1 1 --r2 2 --r3 1"), 2);
  EXPECT_EQ(run("sweep --r1 3 --r2 2 --r3 0 --inject-deviated 1"), 2);
}

TEST(Cli, CorruptedFixtureFailsVerification) {
  fs::path dir = scratch("fixtures");
  fs::create_directories(dir);
  fs::copy_file(kFixtures / "deviated_normal_form.inst", dir / "deviated_normal_form.inst",
                fs::copy_options::overwrite_existing);
  fs::copy_file(kData / "corrupted_deviated.inst", dir / "corrupted_deviated.inst", fs::copy_options::overwrite_existing);
  fs::path out = scratch("verify.json");
  EXPECT_EQ(run("verify-paper --instances 1 --fixtures " + q(dir) + " --json " + q(out)), 1);
  localmult::Report r = localmult::report_from_json(nlohmann::json::parse(std::ifstream(out)));
  bool saw_good = false, saw_bad = false;
  for (const auto& c : r.cases) {
    if (c.id == "fixture:deviated_normal_form.inst:verdict") saw_good = c.pass;
    if (c.id == "fixture:corrupted_deviated.inst:parse") saw_bad = !c.pass;
  }
  EXPECT_TRUE(saw_good);
  EXPECT_TRUE(saw_bad);
}

TEST(Cli, VerifyReportIsDeterministic) {
  fs::path a = scratch("v1.json"), b = scratch("v2.json");
  run("verify-paper --instances 2 --seed 7 --fixtures '' --json " + q(a));
  run("verify-paper --instances 2 --seed 7 --fixtures '' --jobs 2 --json " + q(b));
  EXPECT_EQ(localmult::read_text_file(a), localmult::read_text_file(b));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("length"), 2);
}
