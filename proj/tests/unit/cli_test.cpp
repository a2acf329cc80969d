#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "degex/hypergraph.hpp"

namespace fs = std::filesystem;

namespace degex::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("degex_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  fs::path dir_;
};

TEST_F(CliTest, GenComplete) {
  const Result r = call({"gen", "complete", "--n", "5", "--r", "3", "--out", path("k5.hg")});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(read_hg_file(path("k5.hg")).edge_count(), 10U);
}

TEST_F(CliTest, GenErIsDeterministic) {
  ASSERT_EQ(call({"gen", "er", "--n", "20", "--r", "3", "--p", "1/2", "--seed", "7", "--out", path("a.hg")}).code, kOk);
  ASSERT_EQ(call({"gen", "er", "--n", "20", "--r", "3", "--p", "1/2", "--seed", "7", "--out", path("b.hg")}).code, kOk);
  EXPECT_EQ(slurp(path("a.hg")), slurp(path("b.hg")));
  EXPECT_NE(slurp(path("a.hg")).find("seed=7"), std::string::npos);
  ASSERT_EQ(call({"gen", "er", "--n", "20", "--r", "3", "--p", "1/2", "--seed", "8", "--out", path("c.hg")}).code, kOk);
  EXPECT_NE(slurp(path("a.hg")), slurp(path("c.hg")));
}

TEST_F(CliTest, GenPartitionDeletion) {
  ASSERT_EQ(call({"gen", "complete", "--n", "6", "--r", "3", "--out", path("k6.hg")}).code, kOk);
  const Result r = call({"gen", "partition-del", "--in", path("k6.hg"), "--N", "3", "--out", path("g.hg")});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(read_hg_file(path("g.hg")).edge_count(), 8U);
  const auto sidecar = nlohmann::json::parse(slurp(path("g.hg.json")));
  EXPECT_EQ(sidecar["deleted"], 12);
}

TEST_F(CliTest, StatsExamples) {
  const std::string sample = write("s.hg", "3 5\n0 1 2\n0 1 3\n0 1 4\n2 3 4\n");
  const Result r = call({"stats", "--in", sample, "--ell", "2", "--eps", "0.95", "--p", "1/2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["min_degree"], 1);
  EXPECT_EQ(j["eps_min_degree"]["value"], 3);
  EXPECT_EQ(j["poor"]["count"], 9);

  ASSERT_EQ(call({"gen", "complete", "--n", "6", "--r", "3", "--out", path("k6.hg")}).code, kOk);
  const auto k6 = nlohmann::json::parse(call({"stats", "--in", path("k6.hg"), "--ell", "2"}).out);
  EXPECT_EQ(k6["min_degree"], 4);
  EXPECT_EQ(k6["histogram"].size(), 1U);

  const auto empty = nlohmann::json::parse(call({"stats", "--in", write("e.hg", "3 6\n"), "--ell", "2"}).out);
  EXPECT_EQ(empty["min_degree"], 0);
  EXPECT_EQ(empty["histogram"][0]["degree"], 0);

  const Result csv = call({"--format", "csv", "stats", "--in", sample, "--ell", "2"});
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "rank,subset,degree");
}

TEST_F(CliTest, ExtractModes) {
  ASSERT_EQ(call({"gen", "complete", "--n", "5", "--r", "3", "--out", path("k5.hg")}).code, kOk);
  const Result ex = call({"extract", "--in", path("k5.hg"), "--ell", "2", "--m", "4", "--p", "1", "--delta", "1/100",
                          "--mode", "exhaustive"});
  ASSERT_EQ(ex.code, kOk) << ex.err;
  EXPECT_EQ(nlohmann::json::parse(ex.out)["count"], 5);

  ASSERT_EQ(call({"gen", "er", "--n", "30", "--r", "3", "--p", "7/10", "--seed", "3", "--out", path("er.hg")}).code,
            kOk);
  const std::vector<std::string> args{"--seed", "11", "extract", "--in", path("er.hg"), "--ell", "2", "--m", "10",
                                      "--p", "7/10", "--delta", "1/4", "--budget", "200"};
  const Result first = call(args);
  ASSERT_EQ(first.code, kOk) << first.err;
  const auto j = nlohmann::json::parse(first.out);
  EXPECT_TRUE(j["success"].get<bool>());
  EXPECT_EQ(j["seed"], 11);
  EXPECT_EQ(call(args).out, first.out);
  std::vector<std::string> threaded = args;
  threaded.insert(threaded.begin(), {"--threads", "4"});
  EXPECT_EQ(call(threaded).out, first.out);
}

TEST_F(CliTest, AuditAndQr) {
  ASSERT_EQ(call({"gen", "er", "--n", "10", "--r", "3", "--p", "1/2", "--seed", "2", "--out", path("g.hg")}).code, kOk);
  const Result eq3 = call({"audit", "--in", path("g.hg"), "--which", "eq3", "--ell", "2", "--m", "5", "--p", "1/2"});
  ASSERT_EQ(eq3.code, kOk) << eq3.err;
  EXPECT_TRUE(nlohmann::json::parse(eq3.out)["holds"].get<bool>());

  const Result qr = call({"qr", "--in", path("g.hg"), "--p", "1/2", "--check-implication"});
  ASSERT_EQ(qr.code, kOk) << qr.err;
  const Result qr4 = call({"--threads", "4", "qr", "--in", path("g.hg"), "--p", "1/2", "--check-implication"});
  EXPECT_EQ(qr4.out, qr.out);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(call({"gen", "er", "--n", "5", "--r", "3", "--p", "3/2"}).code, kValidationError);
  EXPECT_EQ(call({"stats", "--in", write("bad.hg", "3 5\n0 1 7\n"), "--ell", "2"}).code, kValidationError);
  EXPECT_EQ(call({"stats", "--in", path("missing.hg"), "--ell", "2"}).code, kValidationError);
  EXPECT_EQ(call({"frobnicate"}).code, kValidationError);
  EXPECT_EQ(call({"gen", "er", "--n", "5"}).code, kValidationError);

  ASSERT_EQ(call({"gen", "complete", "--n", "24", "--r", "3", "--out", path("k24.hg")}).code, kOk);
  EXPECT_EQ(call({"qr", "--in", path("k24.hg"), "--p", "1/2"}).code, kLimitRefusal);
  EXPECT_EQ(call({"extract", "--in", path("k24.hg"), "--ell", "2", "--m", "12", "--p", "1/2", "--delta", "1/10",
                  "--mode", "exhaustive", "--limit", "1000"})
                .code,
            kLimitRefusal);
}

TEST_F(CliTest, ErrorMessagesMentionTheLine) {
  const Result r = call({"stats", "--in", write("bad.hg", "3 5\n0 1 2\n0 1 7\n"), "--ell", "2"});
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

}  // namespace
}  // namespace degex::cli
