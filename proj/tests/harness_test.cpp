#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "inertia/constructions.hpp"
#include "inertia/graph6.hpp"
#include "inertia/harness.hpp"
#include "inertia/reduction.hpp"

namespace {

using namespace inertia;
using nlohmann::json;

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    path_ = std::filesystem::temp_directory_path() /
            ("inertia_harness_" + std::to_string(counter_++) + ".g6");
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

std::vector<json> lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(json::parse(line));
  return out;
}

ScanConfig config_with(const std::string& checks) {
  ScanConfig c;
  c.checks.enabled = parse_check_list(checks);
  return c;
}

TEST(Scan, TightPair) {
  TempFile input("A_\nDhc\n");
  ScanConfig config = config_with("main");
  config.inputs = {input.path()};
  std::ostringstream out, err;
  const RunStats stats = cmd_scan(config, out, err);
  EXPECT_EQ(stats.exit_code, 0);
  const auto records = lines(out.str());
  ASSERT_EQ(records.size(), 2U);
  for (const auto& r : records) EXPECT_EQ(r["results"]["main"]["verdict"], "tight");
  EXPECT_EQ(records[0]["line"], 1);
  EXPECT_EQ(records[1]["inertia"]["n_plus"], 3);
}

TEST(Scan, MalformedLineIsSkippedAndCounted) {
  TempFile input("A_\nBx\nDhc\n");
  ScanConfig config = config_with("main");
  config.inputs = {input.path()};
  std::ostringstream out, err;
  const RunStats stats = cmd_scan(config, out, err);
  EXPECT_EQ(stats.exit_code, 0);
  EXPECT_EQ(stats.records, 2U);
  EXPECT_EQ(stats.parse_errors, 1U);
  EXPECT_NE(err.str().find(":2:"), std::string::npos);

  config.fail_fast = true;
  std::ostringstream out2, err2;
  const RunStats aborted = cmd_scan(config, out2, err2);
  EXPECT_EQ(aborted.exit_code, 1);
  EXPECT_EQ(aborted.records, 1U);
}

TEST(Scan, CycleCapGivesNotApplicable) {
  TempFile input(write_graph6(cycle_graph(20)) + "\n");
  ScanConfig config = config_with("ma_yang_li");
  config.inputs = {input.path()};
  std::ostringstream out, err;
  EXPECT_EQ(cmd_scan(config, out, err).exit_code, 0);
  EXPECT_EQ(lines(out.str())[0]["results"]["ma_yang_li"]["verdict"], "not_applicable");
}

TEST(Scan, ExitCodes) {
  RunStats stats;
  EXPECT_EQ(exit_code_for(stats), 0);
  stats.conjecture_violations = 1;
  EXPECT_EQ(exit_code_for(stats), 2);
  stats.proven_violations = 1;
  EXPECT_EQ(exit_code_for(stats), 1);
}

TEST(Scan, MissingFileIsOperationalError) {
  ScanConfig config = config_with("main");
  config.inputs = {"/nonexistent/input.g6"};
  std::ostringstream out, err;
  EXPECT_EQ(cmd_scan(config, out, err).exit_code, 1);
}

TEST(Scan, OutputIndependentOfParallelism) {
  std::string corpus;
  for (std::size_t n = 3; n <= 12; ++n) {
    corpus += write_graph6(cycle_graph(n)) + "\n";
    corpus += write_graph6(complete_graph(n)) + "\n";
    corpus += write_graph6(path_graph(n)) + "\n";
  }
  TempFile input(corpus);
  std::string reference;
  for (std::size_t jobs : {1U, 2U, 4U}) {
    ScanConfig config;
    config.inputs = {input.path()};
    config.jobs = jobs;
    std::ostringstream out, err;
    cmd_scan(config, out, err);
    if (jobs == 1)
      reference = out.str();
    else
      EXPECT_EQ(out.str(), reference) << jobs;
  }
}

TEST(Scan, CsvOutput) {
  TempFile input("A_\n");
  ScanConfig config = config_with("main,weaker");
  config.inputs = {input.path()};
  config.emit = EmitFormat::csv;
  std::ostringstream out, err;
  cmd_scan(config, out, err);
  std::istringstream is(out.str());
  std::string header, row;
  std::getline(is, header);
  std::getline(is, row);
  EXPECT_NE(header.find("main_verdict,main_margin,weaker_verdict"), std::string::npos);
  EXPECT_EQ(row, "1,A_,2,1,1,0,1,0,2,true,false,tight,0,tight,0");
}

TEST(Enumerate, CountsLabeledGraphs) {
  ScanConfig config = config_with("main");
  std::ostringstream out, err;
  const RunStats stats = cmd_enumerate(4, config, out, err);
  EXPECT_EQ(stats.records, 75U);
  EXPECT_EQ(stats.exit_code, 0);
  const auto summary = lines(out.str()).back()["summary"];
  EXPECT_EQ(summary["graphs"], 75);
  EXPECT_EQ(summary["graphs_per_order"], json::parse("[1,2,8,64]"));
  EXPECT_EQ(summary["verdicts"]["main"]["violated"], 0);
  EXPECT_THROW(cmd_enumerate(8, config, out, err), std::invalid_argument);
}

TEST(Enumerate, MainAndSignatureFormAgree) {
  ScanConfig config = config_with("main,signature_form");
  std::ostringstream out, err;
  const RunStats stats = cmd_enumerate(5, config, out, err);
  const auto& a = stats.verdicts.at("main");
  const auto& b = stats.verdicts.at("signature_form");
  EXPECT_EQ(a.holds, b.holds);
  EXPECT_EQ(a.tight, b.tight);
  EXPECT_EQ(a.violated, 0U);
  const auto summary = lines(out.str()).back()["summary"];
  EXPECT_EQ(summary["tight"]["main"], summary["tight"]["signature_form"]);
}

TEST(Enumerate, TorgasevHoldsOnReducedGraphs) {
  ScanConfig config = config_with("torgasev");
  std::ostringstream out, err;
  const RunStats stats = cmd_enumerate(6, config, out, err);
  EXPECT_EQ(stats.verdicts.at("torgasev").violated, 0U);
  EXPECT_GT(stats.verdicts.at("torgasev").tight, 0U);
  EXPECT_EQ(stats.exit_code, 0);
}

TEST(Sample, SmallOrder) {
  ScanConfig config = config_with("main");
  config.seed = 7;
  std::ostringstream out, err;
  const RunStats stats = cmd_sample(2, 4, config, out, err);
  EXPECT_EQ(stats.records, 4U);
  const auto records = lines(out.str());
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& in = records[i]["inertia"];
    const bool k2 = in == json::parse(R"({"n_plus":1,"n_zero":0,"n_minus":1})");
    const bool empty = in == json::parse(R"({"n_plus":0,"n_zero":2,"n_minus":0})");
    EXPECT_TRUE(k2 || empty);
  }
  EXPECT_EQ(records.back()["summary"]["rng"], "mt19937_64");
}

TEST(Sample, DeterministicAcrossRunsAndJobs) {
  ScanConfig config = config_with("main");
  config.seed = 1;
  std::ostringstream a, b, err;
  SampleSummary summary;
  const RunStats stats = cmd_sample(50, 100, config, a, err, &summary);
  EXPECT_EQ(stats.records, 100U);
  EXPECT_EQ(stats.verdicts.at("main").violated, 0U);
  config.jobs = 3;
  cmd_sample(50, 100, config, b, err);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NEAR(summary.mean_plus_ratio, 0.5, 0.1);
}

TEST(Construct, Examples) {
  // Line-graph vertices follow the lexicographic edge order, so L(C5) is a relabelled C5.
  const Graph lc5 = evaluate_construction("cycle 5 | line_graph");
  EXPECT_FALSE(find_isomorphism(lc5, cycle_graph(5)).empty());
  EXPECT_EQ(evaluate_construction("complete 2 | kl_double | kl_double").order(), 14U);
  const Graph p = evaluate_construction("triangular 5 | complement");
  EXPECT_EQ(p.order(), 10U);
  EXPECT_EQ(p.size(), 15U);
  EXPECT_EQ(evaluate_construction("g6:A_ | join complete 1"), complete_graph(3));
  EXPECT_EQ(evaluate_construction("complete 2 | add_twin 0 closed"), complete_graph(3));
  EXPECT_EQ(evaluate_construction("cycle 4 | reduce"), complete_graph(2));
  EXPECT_EQ(evaluate_construction("cycle 5 | union cycle 5").order(), 10U);
  EXPECT_EQ(evaluate_construction("cycle 5 | tensor cycle 5").order(), 25U);
  EXPECT_THROW(evaluate_construction("paley 9"), std::invalid_argument);
  EXPECT_THROW(evaluate_construction("cycle 5 | spin"), std::invalid_argument);
  EXPECT_THROW(evaluate_construction("complete 40 | line_graph", 100), OrderOverflow);
  std::ostringstream out, err;
  EXPECT_EQ(cmd_construct({"cycle 5 | line_graph"}, kDefaultMaxOrder, out, err), 0);
  EXPECT_EQ(out.str(), write_graph6(lc5) + "\n");
}

TEST(Fixtures, AllExpectationsMet) {
  ScanConfig config;
  std::ostringstream out, err;
  const RunStats stats = cmd_fixtures(config, out, err);
  EXPECT_EQ(stats.exit_code, 0) << err.str();
  const auto records = lines(out.str());
  EXPECT_EQ(records.back()["summary"]["expectation_failures"], 0);
  bool saw_paley13 = false;
  for (const auto& r : records) {
    if (r.contains("graph") && r["graph"] == "Paley(13)") {
      saw_paley13 = true;
      EXPECT_EQ(r["results"]["self_complementary"]["verdict"], "tight");
    }
  }
  EXPECT_TRUE(saw_paley13);
}

TEST(Jobs, EnvironmentDefault) {
  ::setenv(kJobsEnv, "3", 1);
  EXPECT_EQ(default_jobs(), 3U);
  ::setenv(kJobsEnv, "zero", 1);
  EXPECT_EQ(default_jobs(), 1U);
  ::unsetenv(kJobsEnv);
  EXPECT_EQ(default_jobs(), 1U);
}

}  // namespace
