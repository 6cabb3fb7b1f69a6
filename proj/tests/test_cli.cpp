#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "cjsp.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cjsp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Result run(const std::string& args) {
    const std::string out = (dir_ / "stdout.txt").string();
    const std::string err = (dir_ / "stderr.txt").string();
    const std::string cmd = std::string(CJSP_CLI) + " " + args + " >" + out + " 2>" + err;
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, cjsp::read_text_file(out), cjsp::read_text_file(err)};
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

  static std::string data(const std::string& rel) { return std::string(CJSP_DATA_DIR) + "/" + rel; }

  fs::path dir_;
};

const std::string kFast = " --steps 40 --steps-per-temp 40";

TEST_F(Cli, SolveWritesScheduleAboveLowerBound) {
  const Result r = run("solve --instance " + data("orlib/ft06.jss") + " --order 1 --seed 7" + kFast);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto json = nlohmann::json::parse(r.out);
  EXPECT_EQ(json["instance"], "ft06");
  EXPECT_EQ(json["order"], 1);
  EXPECT_EQ(json["scale"], 1);
  EXPECT_GE(json["makespan"].get<int>(), 47);
  EXPECT_EQ(json["entries"].size(), 36u);
  EXPECT_NE(r.err.find("makespan"), std::string::npos);
}

TEST_F(Cli, SolveThenValidateAndGantt) {
  const std::string sched = path("s.json");
  ASSERT_EQ(run("solve --instance " + data("orlib/ft06.jss") + " --order 2 --seed 3 --out " + sched + kFast).code,
            0);
  const Result v = run("validate --instance " + data("orlib/ft06.jss") + " --schedule " + sched);
  EXPECT_EQ(v.code, 0) << v.out;
  EXPECT_NE(v.out.find("ok: 72 operations"), std::string::npos);

  const Result svg = run("gantt --schedule " + sched);
  ASSERT_EQ(svg.code, 0);
  EXPECT_EQ(svg.out.rfind("<svg", 0), 0u);
  const Result ascii = run("gantt --ascii --schedule " + sched);
  ASSERT_EQ(ascii.code, 0);
  EXPECT_EQ(std::count(ascii.out.begin(), ascii.out.end(), '\n'), 6);
}

TEST_F(Cli, ValidateReportsViolations) {
  write("bad.json",
        R"({"instance":"x","order":1,"scale":1,"makespan":5,"entries":[)"
        R"({"job":0,"op":0,"machine":0,"start":0,"end":3},{"job":1,"op":0,"machine":0,"start":2,"end":5}]})");
  write("two.jss", "2 1\n0 3\n0 3\n");
  const Result r = run("validate --instance " + path("two.jss") + " --schedule " + path("bad.json"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("machine-overlap"), std::string::npos);
}

TEST_F(Cli, GanttAsciiSingleOperation) {
  write("one.json", R"({"instance":"x","order":1,"scale":1,"makespan":5,"entries":[)"
                    R"({"job":0,"op":0,"machine":0,"start":0,"end":5}]})");
  const Result r = run("gantt --ascii --schedule " + path("one.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1);
  EXPECT_EQ(r.out.rfind("M0 |", 0), 0u);
}

TEST_F(Cli, ExpandWritesExtendedFormat) {
  const Result r = run("expand --order 4 " + data("orlib/ft06.jss"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("# expanded from ft06 order 4\n24 6\n", 0), 0u);
  const cjsp::Instance back = cjsp::parse_extended(r.out);
  EXPECT_EQ(back.job_count(), 24);
  EXPECT_TRUE(back.structurally_equal(cjsp::expand(cjsp::load_instance(data("orlib/ft06.jss")), 4).expanded));

  // Expanded files are accepted by solve.
  write("ft06_k4.jsx", r.out);
  EXPECT_EQ(run("solve --instance " + path("ft06_k4.jsx") + " --steps 3 --steps-per-temp 3").code, 0);
}

TEST_F(Cli, MalformedInstanceExitsTwoWithLine) {
  write("bad.jss", "# comment\n2 2\n0 1 1 1\n0 1 1\n");
  const Result r = run("solve --instance " + path("bad.jss"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 4"), std::string::npos) << r.err;
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("solve --instance " + path("absent.jss")).code, 4);
  EXPECT_EQ(run("solve --instance " + data("orlib/ft06.jss") + " --cooling-fraction 1.2").code, 3);
  EXPECT_EQ(run("solve --instance " + data("orlib/ft06.jss") + " --order 0").code, 3);
  EXPECT_EQ(run("solve --instance " + data("orlib/ft06.jss") + " --bogus").code, 64);
  EXPECT_EQ(run("frobnicate").code, 64);
  EXPECT_EQ(run("").code, 64);
  EXPECT_EQ(run("bench --orders 1,x").code, 3);
}

TEST_F(Cli, HelpDocumentsFlags) {
  const Result solve = run("solve --help");
  EXPECT_EQ(solve.code, 0);
  for (const char* flag : {"--instance", "--order", "--seed", "--steps", "--steps-per-temp", "--kt",
                           "--cooling-fraction", "--initial-temperature", "--time-limit", "--config", "--out",
                           "--trace"}) {
    EXPECT_NE(solve.out.find(flag), std::string::npos) << flag;
  }
  const Result bench = run("bench --help");
  EXPECT_EQ(bench.code, 0);
  for (const char* flag : {"--dir", "--orders", "--seeds", "--registry", "--format", "--workers", "--manifest"}) {
    EXPECT_NE(bench.out.find(flag), std::string::npos) << flag;
  }
  for (const char* cmd : {"expand", "validate", "gantt"}) EXPECT_EQ(run(std::string(cmd) + " --help").code, 0);
}

TEST_F(Cli, ConfigFileAndSeedEnvironment) {
  write("sa.cfg", "# annealing profile\ncooling_steps = 30\nsteps_per_temp = 30\nseed = 9\n");
  const Result a = run("solve --instance " + data("orlib/la01.jss") + " --config " + path("sa.cfg"));
  const Result b = run("solve --instance " + data("orlib/la01.jss") + " --steps 30 --steps-per-temp 30 --seed 9");
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);

  const Result env = run("solve --instance " + data("orlib/la01.jss") + " --steps 30 --steps-per-temp 30");
  const std::string with_env = "CJSP_SEED=9 ";
  const std::string cmd = with_env + std::string(CJSP_CLI) + " solve --instance " + data("orlib/la01.jss") +
                          " --steps 30 --steps-per-temp 30 >" + path("env.json");
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_EQ(cjsp::read_text_file(path("env.json")), b.out);
  EXPECT_NE(env.out, b.out);

  write("bad.cfg", "cooling_steps = many\n");
  EXPECT_EQ(run("solve --instance " + data("orlib/la01.jss") + " --config " + path("bad.cfg")).code, 3);
}

TEST_F(Cli, TraceCsv) {
  const Result r = run("solve --instance " + data("orlib/ft06.jss") + " --steps 12 --steps-per-temp 5 --trace " +
                    path("trace.csv"));
  ASSERT_EQ(r.code, 0);
  const std::string trace = cjsp::read_text_file(path("trace.csv"));
  EXPECT_EQ(trace.rfind("step,temperature,current,best\n", 0), 0u);
  EXPECT_EQ(std::count(trace.begin(), trace.end(), '\n'), 13);
}

TEST_F(Cli, BenchOneRowPerInstance) {
  fs::create_directories(dir_ / "corpus");
  fs::copy_file(data("orlib/ft06.jss"), dir_ / "corpus/ft06.jss", fs::copy_options::overwrite_existing);
  fs::copy_file(data("orlib/la01.jss"), dir_ / "corpus/la01.jss");
  const Result r = run("bench --dir " + path("corpus") + " --orders 1 --seeds 1 --format csv" + kFast);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
  EXPECT_NE(r.out.find("\nft06,6,1,55,"), std::string::npos);
  EXPECT_NE(r.out.find("\nla01,5,1,666,"), std::string::npos);
}

TEST_F(Cli, BenchManifestAndMarkdown) {
  write("m.txt", "ft06 " + data("orlib/ft06.jss") + " 55\n");
  // Manifest paths are relative to the manifest, so use an absolute one here.
  const Result r = run("bench --manifest " + path("m.txt") + " --orders 1..3 --format md --summary" + kFast);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("| ft06 | 55 |"), std::string::npos);
  EXPECT_NE(r.out.find("### ft06"), std::string::npos);
  EXPECT_NE(r.err.find("mean Dif%"), std::string::npos);
}

TEST_F(Cli, BenchRegistryOverride) {
  write("reg.csv", "name,best1\nla01,700\n");
  const Result r = run("bench --instance " + data("orlib/la01.jss") + " --registry " + path("reg.csv") + kFast);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\nla01,5,1,700,"), std::string::npos) << r.out;
}

}  // namespace
