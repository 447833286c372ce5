#include "cli.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <map>
#include <sstream>

#include <json.hpp>

#include "qaoa/error.hpp"
#include "qaoa/simulator.hpp"
#include "qaoa/text.hpp"

namespace qaoa::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(RunConfig cfg, const std::string& command) {
  cfg.command = command;
  std::ostringstream out, err;
  const int code = run_command(cfg, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& line : text::split_lines(text)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss{std::string(line)};
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

int count_lines_starting(const std::string& text, const std::string& prefix) {
  int count = 0;
  for (const auto& line : text::split_lines(text))
    if (line.rfind(prefix, 0) == 0) ++count;
  return count;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("qaoa_cli_test_" + std::to_string(::getpid()) + "_" +
                                        std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

TEST(CompareTest, CompleteGraphTable) {
  const auto result = invoke({}, "compare");
  ASSERT_EQ(result.code, kExitOk) << result.err;
  EXPECT_EQ(result.out.rfind("# qaoa-cnot compare v1\n", 0), 0u);
  const auto rows = csv_rows(result.out);
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[0][4], "traditional");
  const std::map<int, std::array<std::string, 3>> expected{
      {10, {"90", "85", "81"}},       {20, {"380", "370", "361"}},    {30, {"870", "855", "841"}},
      {40, {"1560", "1540", "1521"}}, {50, {"2450", "2425", "2401"}}, {60, {"3540", "3510", "3481"}}};
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const int n = std::stoi(rows[i][1]);
    ASSERT_TRUE(expected.count(n));
    EXPECT_EQ(rows[i][4], expected.at(n)[0]) << n;
    EXPECT_EQ(rows[i][5], expected.at(n)[1]) << n;
    EXPECT_EQ(rows[i][6], expected.at(n)[2]) << n;
  }
}

TEST(CompareTest, SmallGraphs) {
  RunConfig cfg;
  cfg.cycle = {4};
  cfg.complete = {2};
  const auto rows = csv_rows(invoke(cfg, "compare").out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1][0], "complete");
  EXPECT_EQ((std::vector<std::string>(rows[1].begin() + 4, rows[1].begin() + 7)),
            (std::vector<std::string>{"2", "1", "1"}));
  EXPECT_EQ(rows[2][0], "cycle");
  EXPECT_EQ((std::vector<std::string>(rows[2].begin() + 4, rows[2].begin() + 7)),
            (std::vector<std::string>{"8", "6", "5"}));
  EXPECT_EQ(rows[2][8], "4");
  EXPECT_EQ(rows[2][10], "5");
}

TEST(CompareTest, GraphFileAndGenerator) {
  TempDir dir;
  const auto file = (dir.path / "c4.txt").string();
  text::write_file(file, "# four-cycle\n4\n0 1\n1 2\n2 3\n3 0\n");
  RunConfig cfg;
  cfg.graph_files = {file};
  cfg.gen_specs = {"10,0.8,7"};
  cfg.p = 2;
  const auto result = invoke(cfg, "compare");
  ASSERT_EQ(result.code, kExitOk) << result.err;
  const auto rows = csv_rows(result.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1][4], "16");
  EXPECT_EQ(rows[1][5], "14");
  EXPECT_EQ(rows[1][6], "13");
  EXPECT_EQ(rows[2][0], "erdos_renyi:p=0.8:seed=7");
  EXPECT_EQ(rows[2][2], "36");
  EXPECT_EQ(rows[2][4], "144");
  EXPECT_EQ(std::stoi(rows[2][6]), 144 - 9);
  EXPECT_EQ(invoke(cfg, "compare").out, result.out);
}

TEST(CompareTest, BadInputsAreUsageErrors) {
  RunConfig cfg;
  cfg.graph_files = {"/nonexistent/graph.txt"};
  EXPECT_EQ(invoke(cfg, "compare").code, kExitUsage);
  cfg = {};
  cfg.gen_specs = {"5,0.0,1"};
  EXPECT_EQ(invoke(cfg, "compare").code, kExitUsage);
  cfg = {};
  cfg.gen_specs = {"5,0.5"};
  EXPECT_EQ(invoke(cfg, "compare").code, kExitUsage);
  EXPECT_EQ(invoke({}, "bogus").code, kExitUsage);
}

TEST(VerifyTest, DefaultSuitePasses) {
  const auto result = invoke({}, "verify");
  EXPECT_EQ(result.code, kExitOk) << result.err;
  EXPECT_EQ(count_lines_starting(result.out, "PASS "), 50);
  EXPECT_NE(result.out.find("verify: 2000 checks, 0 failures"), std::string::npos);
}

TEST(VerifyTest, CorruptedScheduleFails) {
  RunConfig cfg;
  cfg.corrupt = true;
  cfg.cycle = {4, 5};
  cfg.instances = 5;
  const auto result = invoke(cfg, "verify");
  EXPECT_EQ(result.code, kExitVerifyFailed);
  EXPECT_EQ(count_lines_starting(result.out, "FAIL "), 2);
  EXPECT_NE(result.out.find("schedule=invalid"), std::string::npos);
  EXPECT_NE(result.err.find("equivalence failure: cycle"), std::string::npos);
}

TEST(VerifyTest, CompleteTwelveWithFiveParams) {
  RunConfig cfg;
  cfg.complete = {12};
  cfg.params = 5;
  const auto result = invoke(cfg, "verify");
  EXPECT_EQ(result.code, kExitOk) << result.err;
  EXPECT_NE(result.out.find("verify: 10 checks, 0 failures"), std::string::npos);
}

TEST(VerifyTest, TooManyQubits) {
  RunConfig cfg;
  cfg.complete = {kMaxSimQubits + 1};
  EXPECT_EQ(invoke(cfg, "verify").code, kExitUsage);
}

TEST(ParamsTest, Precedence) {
  const auto g = cycle_graph(4);
  RunConfig cfg;
  EXPECT_EQ(resolve_params(cfg, g).gamma, std::vector<double>{kDefaultGamma});
  cfg.param_seed = 3;
  const auto seeded = resolve_params(cfg, g);
  EXPECT_EQ(seeded.gamma, resolve_params(cfg, g).gamma);
  EXPECT_NE(seeded.gamma[0], kDefaultGamma);
  cfg.grid = 40;
  EXPECT_EQ(resolve_params(cfg, g).gamma[0], grid_search_p1(g, 40).gamma);
  cfg.gamma = {0.1};
  cfg.beta = {0.2};
  EXPECT_EQ(resolve_params(cfg, g).beta, std::vector<double>{0.2});
  cfg.p = 2;
  EXPECT_THROW(resolve_params(cfg, g), Error);
}

TEST(NoiseSweepTest, ZeroTrialsRejected) {
  RunConfig cfg;
  cfg.trials = 0;
  const auto result = invoke(cfg, "noise-sweep");
  EXPECT_EQ(result.code, kExitUsage);
  EXPECT_NE(result.err.find("trials"), std::string::npos);
}

TEST(NoiseSweepTest, NoiselessIsExactAndDeterministic) {
  RunConfig cfg;
  cfg.p_cx = 0.0;
  cfg.sizes = {4, 6};
  cfg.p_edges = {0.6, 1.0};
  cfg.instances = 3;
  cfg.trials = 5;
  const auto result = invoke(cfg, "noise-sweep");
  ASSERT_EQ(result.code, kExitOk) << result.err;
  const auto rows = csv_rows(result.out);
  ASSERT_EQ(rows.size(), 1u + 2 * 2 * 3);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_NEAR(std::stod(rows[i][9]), 1.0, 1e-12);
    EXPECT_NEAR(std::stod(rows[i][10]), 1.0, 1e-12);
  }
  EXPECT_EQ(invoke(cfg, "noise-sweep").out, result.out);
}

TEST(NoiseSweepTest, DeviceAddsRelaxation) {
  TempDir dir;
  const auto path = (dir.path / "dev.json").string();
  text::write_file(path, R"({"name": "t", "t_cx_ns": 300, "T1_ns": 100000, "p_cx": 0.0})");
  RunConfig cfg;
  cfg.device_path = path;
  cfg.sizes = {4};
  cfg.p_edges = {1.0};
  cfg.instances = 2;
  cfg.trials = 3;
  const auto rows = csv_rows(invoke(cfg, "noise-sweep").out);
  ASSERT_EQ(rows.size(), 4u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_EQ(std::stod(rows[i][9]), 1.0);
    const double layers = std::stod(rows[i][8]);
    EXPECT_NEAR(std::stod(rows[i][10]), std::exp(-layers * 300.0 / 100000.0), 1e-9);
  }
}

TEST(NoiseSweepTest, OrderingAtModerateDensity) {
  RunConfig cfg;
  cfg.p_edges = {0.6};
  const auto result = invoke(cfg, "noise-sweep");
  ASSERT_EQ(result.code, kExitOk);
  const auto rows = csv_rows(result.out);
  ASSERT_EQ(rows.size(), 1u + 7 * 3);
  int ordered = 0;
  for (std::size_t i = 1; i + 2 < rows.size(); i += 3) {
    ASSERT_EQ(rows[i][3], "traditional");
    ASSERT_EQ(rows[i + 2][3], "dfs");
    const double trad = std::stod(rows[i][10]), ec = std::stod(rows[i + 1][10]), dfs = std::stod(rows[i + 2][10]);
    ordered += dfs >= ec && ec >= trad;
  }
  EXPECT_GE(ordered * 10, 7 * 8);
}

TEST(EmitTest, WritesArtifacts) {
  TempDir dir;
  RunConfig cfg;
  cfg.cycle = {4};
  cfg.out_dir = dir.path.string();
  const auto result = invoke(cfg, "emit");
  ASSERT_EQ(result.code, kExitOk) << result.err;
  const auto qasm = [&](const std::string& v) {
    return text::read_file((dir.path / ("circuit_" + v + ".qasm")).string());
  };
  EXPECT_EQ(count_lines_starting(qasm("dfs"), "cx "), 5);
  EXPECT_EQ(count_lines_starting(qasm("edge_coloring"), "cx "), 6);
  EXPECT_EQ(count_lines_starting(qasm("traditional"), "cx "), 8);
  EXPECT_EQ(parse_qasm(qasm("dfs")).num_qubits(), 4);

  const auto report = nlohmann::json::parse(text::read_file((dir.path / "error_report_dfs.json").string()));
  EXPECT_EQ(report["k1"], 3);
  EXPECT_EQ(report["N1"], 1);
  EXPECT_EQ(report["beneficial"], true);
  const auto plan = nlohmann::json::parse(text::read_file((dir.path / "plan_dfs.json").string()));
  EXPECT_EQ(plan["tree"].size(), 3u);
  const auto coloring = nlohmann::json::parse(text::read_file((dir.path / "plan_edge_coloring.json").string()));
  EXPECT_EQ(coloring["num_colors"], 2);
  EXPECT_TRUE(fs::exists(dir.path / "schedule_traditional.json"));
}

TEST(EmitTest, Errors) {
  RunConfig cfg;
  cfg.cycle = {4};
  cfg.out_dir = "/nonexistent/qaoa-out";
  const auto missing = invoke(cfg, "emit");
  EXPECT_EQ(missing.code, kExitUsage);
  EXPECT_NE(missing.err.find("/nonexistent/qaoa-out"), std::string::npos);
  cfg.out_dir.clear();
  EXPECT_EQ(invoke(cfg, "emit").code, kExitUsage);
  cfg.out_dir = "/tmp";
  cfg.cycle = {4, 5};
  EXPECT_EQ(invoke(cfg, "emit").code, kExitUsage);
}

Outcome shell(const std::string& args) {
  const std::string cmd = std::string(QAOA_CNOT_BIN) + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return {-1, "", "popen failed"};
  std::string output;
  char buf[4096];
  for (std::size_t got; (got = std::fread(buf, 1, sizeof buf, pipe)) > 0;) output.append(buf, got);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output, ""};
}

TEST(BinaryTest, ExitCodes) {
  const auto ok = shell("compare --cycle 4");
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("cycle,4,4,1,8,6,5"), std::string::npos);
  EXPECT_EQ(shell("verify --cycle 4,5 --corrupt").code, 1);
  EXPECT_EQ(shell("verify --complete 5 --gamma 0.3 --beta 0.2").code, 0);
  EXPECT_EQ(shell("noise-sweep --trials 0").code, 2);
  EXPECT_EQ(shell("compare --no-such-flag").code, 2);
  EXPECT_EQ(shell("").code, 2);
  EXPECT_EQ(shell("--help").code, 0);
}

}  // namespace
}  // namespace qaoa::cli
