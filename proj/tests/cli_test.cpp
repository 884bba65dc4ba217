#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "thetalab_cli/job.hpp"

namespace thetalab::cli {
namespace {

using json = nlohmann::ordered_json;

const std::string kJobs = THETALAB_JOBS_DIR;

RunResult run_file(const std::string& name, RunOptions opt = {}) { return run_job(load_job(kJobs + "/" + name), opt); }

RunResult run_text(const std::string& text, RunOptions opt = {}) { return run_job(parse_job(text, "inline.toml"), opt); }

std::string input_error(const std::string& text) {
  try {
    (void)parse_job(text, "inline.toml");
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

struct Exec {
  int status = -1;
  std::string out;
};

Exec exec(const std::string& args) {
  Exec r;
  const std::string cmd = std::string(THETA_LAB_EXE) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

void expect_only_strings(const json& v) {
  if (v.is_object() || v.is_array()) {
    for (const auto& e : v) expect_only_strings(e);
    return;
  }
  EXPECT_FALSE(v.is_number()) << "numeric JSON value " << v.dump();
}

const std::string kNode = R"(
vars = ["x", "y"]
f = "x*y"
[modules.X]
kind = "ideal"
gens = ["x"]
[modules.Y]
kind = "ideal"
gens = ["y"]
)";

TEST(CliJobs, ConeLineThetaVanishes) {
  const RunResult r = run_file("cone_line.toml");
  EXPECT_EQ(r.exit_code, 0);
  const json& t = r.report["tasks"][0];
  EXPECT_EQ(t["verdict"], "PASS");
  EXPECT_EQ(t["result"]["pairs"][0]["theta"], "0");
  EXPECT_EQ(t["result"]["pairs"][0]["l_even"], "1");
  EXPECT_EQ(t["result"]["pairs"][0]["l_odd"], "1");
  ASSERT_EQ(t["notes"].size(), 1u);
  EXPECT_EQ(t["notes"][0].get<std::string>().rfind("CONE_MODULE", 0), 0u);
}

TEST(CliJobs, NodeGramIsPsd) {
  const RunResult r = run_file("node_gram.toml");
  EXPECT_EQ(r.exit_code, 0);
  const json& res = r.report["tasks"][0]["result"];
  EXPECT_EQ(res["G"], json::parse(R"([["-1","1"],["1","-1"]])"));
  EXPECT_EQ(res["psd"], true);
  EXPECT_EQ(res["rank"], "1");
}

TEST(CliJobs, MalformedPolynomialIsInputError) {
  try {
    (void)load_job(kJobs + "/malformed.toml");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("malformed.toml:2:5"), std::string::npos) << msg;
    EXPECT_NE(msg.find("SYNTAX"), std::string::npos) << msg;
    EXPECT_NE(msg.find("position 2"), std::string::npos) << msg;
  }
}

TEST(CliJobs, QuadricJobWithOracle) {
  RunOptions opt;
  opt.oracle_check = true;
  const RunResult r = run_file("quadric.toml", opt);
  EXPECT_EQ(r.exit_code, 0) << r.report.dump(2);
  const json& tasks = r.report["tasks"];
  EXPECT_EQ(tasks[0]["name"], "cohomological formula");
  EXPECT_EQ(tasks[0]["result"]["pairs"][0]["theta"], "-1");
  EXPECT_EQ(tasks[0]["result"]["pairs"][1]["theta"], "1");
  EXPECT_EQ(tasks[1]["result"]["length"], "1");
  EXPECT_EQ(tasks[2]["result"]["status"], "PSD");
  EXPECT_EQ(tasks[3]["result"]["theta_vs_residue"]["scalar"], "-1/36");
  EXPECT_EQ(tasks[3]["result"]["modules"][0]["top_class"], "6");
  for (const json& t : tasks) EXPECT_EQ(t["verdict"], "PASS") << t["name"];
}

TEST(CliJobs, ModulesAreListedInSortedOrder) {
  const RunResult r = run_text(kNode + R"(
[modules.A]
kind = "mf"
A = [["y"]]
B = [["x"]]
[[tasks]]
kind = "check-all"
)");
  EXPECT_EQ(r.report["tasks"][0]["inputs"]["modules"], json::parse(R"(["A","X","Y"])"));
  EXPECT_EQ(r.exit_code, 0);
}

TEST(CliJobs, NumericValuesAreStrings) {
  RunOptions opt;
  opt.oracle_check = true;
  for (const char* job : {"cone_all.toml", "node_all.toml"}) expect_only_strings(run_file(job, opt).report);
  expect_only_strings(run_file("quadric.toml").report);
}

TEST(CliJobs, ReportDoesNotDependOnThreads) {
  for (const char* job : {"cone_all.toml", "node_all.toml"}) {
    RunOptions one;
    RunOptions four;
    four.threads = 4;
    EXPECT_EQ(run_file(job, one).report.dump(2), run_file(job, four).report.dump(2)) << job;
  }
}

TEST(CliJobs, FormulaMismatchIsMathFailure) {
  const RunResult r = run_text(kNode + R"(
[[tasks]]
kind = "theta"
pairs = [["X", "Y"]]
formulas = [[1, 1, 1, 1]]
)");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.report["tasks"][0]["verdict"], "FAIL");
  EXPECT_EQ(r.report["tasks"][0]["result"]["pairs"][0]["formula_agrees"], false);
}

TEST(CliJobs, EvenDimensionGramIsNotApplicable) {
  const RunResult r = run_file("cone_all.toml");
  EXPECT_EQ(r.exit_code, 0);
  const json& gram = r.report["tasks"][1];
  EXPECT_EQ(gram["verdict"], "NOT_APPLICABLE");
  EXPECT_TRUE(gram["result"]["psd"].is_null());
  bool parity = false;
  for (const json& n : gram["notes"]) parity = parity || n.get<std::string>().rfind("PARITY", 0) == 0;
  EXPECT_TRUE(parity);
}

TEST(CliJobs, TaskErrorNamesTaskAndSpan) {
  const RunResult r = run_text(R"(
vars = ["x", "y", "z"]
f = "x*y - z^2"
[[tasks]]
name = "bad intersection"
kind = "intersection"
I = ["x"]
J = ["y"]
)");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(r.report["tasks"][0]["verdict"], "ERROR");
  EXPECT_EQ(r.report["tasks"][0]["result"]["error"]["code"], "NOT_PROPER");
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_NE(r.diagnostics[0].find("task 'bad intersection' (inline.toml:4:1)"), std::string::npos) << r.diagnostics[0];
}

TEST(CliJobs, InputErrorsNameTheirSource) {
  EXPECT_NE(input_error(kNode + "[[tasks]]\nkind = \"theta\"\npairs = [[\"X\", \"Z\"]]\n").find("unknown module 'Z'"),
            std::string::npos);
  EXPECT_NE(input_error(kNode + "[[tasks]]\nkind = \"spectrum\"\n").find("needs top-level weights"), std::string::npos);
  EXPECT_NE(input_error(kNode + "[[tasks]]\nkind = \"frobnicate\"\n").find("unknown task kind"), std::string::npos);
  EXPECT_NE(input_error(kNode + "extra = 1\n").find("unknown key 'extra'"), std::string::npos);
  EXPECT_NE(input_error(kNode + "[modules.B]\nkind = \"mf\"\nA = [[\"x\"]]\nB = [[\"x\"]]\n").find("NOT_A_FACTORIZATION"),
            std::string::npos);
  const std::string weights = input_error("vars = [\"x\", \"y\"]\nf = \"x*y\"\nweights = [\"1/3\", \"1/2\"]\n");
  EXPECT_NE(weights.find("inline.toml:3:11: weights"), std::string::npos) << weights;
  EXPECT_NE(weights.find("NOT_QUASIHOMOGENEOUS"), std::string::npos) << weights;
  EXPECT_NE(input_error("vars = [\"x\"\n").find("inline.toml:"), std::string::npos);
  EXPECT_NE(input_error("vars = [\"x\"]\nf = \"1 + x\"\n").find("vanish at the origin"), std::string::npos);
}

TEST(CliJobs, TableMentionsEveryTask) {
  const std::string table = render_table(run_file("quadric.toml").report);
  EXPECT_NE(table.find("cohomological formula (theta): PASS"), std::string::npos);
  EXPECT_NE(table.find("check-all-8 (check-all): PASS"), std::string::npos);
  EXPECT_NE(table.find("scalar: -1/36"), std::string::npos);
}

TEST(CliBinary, ExitCodes) {
  EXPECT_EQ(exec("run " + kJobs + "/cone_line.toml").status, 0);
  EXPECT_EQ(exec("run " + kJobs + "/node_gram.toml --format table").status, 0);
  EXPECT_EQ(exec("run " + kJobs + "/malformed.toml").status, 2);
  EXPECT_EQ(exec("run " + kJobs + "/does-not-exist.toml").status, 2);
  EXPECT_EQ(exec("run " + kJobs + "/cone_line.toml --format xml").status, 2);
  EXPECT_EQ(exec("").status, 2);
}

TEST(CliBinary, JsonIsByteIdenticalAcrossRuns) {
  const Exec a = exec("run " + kJobs + "/cone_all.toml --oracle-check");
  const Exec b = exec("run " + kJobs + "/cone_all.toml --oracle-check --threads 3");
  EXPECT_EQ(a.status, 0);
  EXPECT_FALSE(a.out.empty());
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out)["tasks"][0]["result"]["pairs"][0]["theta"], "0");
}

}  // namespace
}  // namespace thetalab::cli
