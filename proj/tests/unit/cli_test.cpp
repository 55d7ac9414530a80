#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("awtk_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Invocation run(std::vector<std::string> args, bool cached = true) {
    if (cached) {
      args.push_back("--cache");
      args.push_back((dir_ / "cache.jsonl").string());
    }
    std::ostringstream out, err;
    int code = awtk::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string path(const char* name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

std::string read(const std::string& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_F(CliTest, SolvePrintsAw) {
  auto r = run({"solve", "--group", "interval", "--n", "9", "--k", "3"});
  EXPECT_EQ(r.code, awtk::cli::kOk);
  EXPECT_EQ(r.out.substr(0, 5), "aw=4\n");

  auto u = run({"solve", "--n", "14", "--unitary"});
  EXPECT_EQ(u.out.substr(0, 7), "aw_u=5\n");

  auto again = run({"solve", "--n", "9", "--format", "json"});
  auto j = nlohmann::json::parse(again.out);
  EXPECT_EQ(j["aw"], 4);
  EXPECT_EQ(j["source"], "cache");
}

TEST_F(CliTest, WitnessRoundTrip) {
  auto w = path("w.txt");
  auto r = run({"solve", "--group", "cyclic", "--n", "18", "--emit-witness", w});
  EXPECT_EQ(r.code, 0);
  auto check = run({"check-coloring", "--file", w}, false);
  EXPECT_EQ(check.code, awtk::cli::kOk);
  EXPECT_EQ(check.out, "VERDICT rainbow-free\n");

  std::ofstream(path("bad.txt")) << "group=interval n=3\n1 2 3\n";
  auto bad = run({"check-coloring", "--file", path("bad.txt")}, false);
  EXPECT_EQ(bad.code, awtk::cli::kPropertyViolated);
  EXPECT_NE(bad.out.find("VERDICT rainbow\n"), std::string::npos);
  EXPECT_NE(bad.out.find("witness={1,2,3}"), std::string::npos);

  std::ofstream(path("junk.txt")) << "group=interval n=3\n1 3 3\n";
  EXPECT_EQ(run({"check-coloring", "--file", path("junk.txt")}, false).code, awtk::cli::kInvalidInput);
  EXPECT_EQ(run({"check-coloring", "--file", path("missing.txt")}, false).code, awtk::cli::kInvalidInput);
}

TEST_F(CliTest, Dichotomy) {
  auto r = run({"dichotomy", "--N", "8"}, false);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("failures=0"), std::string::npos);
  EXPECT_NE(r.out.find("special=1"), std::string::npos);
}

TEST_F(CliTest, TableRowsAndDiff) {
  auto r = run({"table", "--n-max", "9"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("   9   4   7   8   9\n"), std::string::npos) << r.out;
  EXPECT_NE(r.err.find("mismatches=0"), std::string::npos);

  auto three = run({"table", "--n-max", "3"});
  EXPECT_EQ(three.out, " n\\k   3\n   3   3\n");

  auto csv = run({"table", "--n-max", "9", "--format", "csv"});
  EXPECT_NE(csv.out.find("9,6,9,9,1\n"), std::string::npos);
  EXPECT_EQ(csv.out.find(",0\n"), std::string::npos);
}

TEST_F(CliTest, CsvAndTextAgree) {
  auto text = run({"verify-theorem", "--from", "20", "--to", "27"});
  auto csv = run({"verify-theorem", "--from", "20", "--to", "27", "--format", "csv"});
  EXPECT_EQ(text.code, 0);
  EXPECT_EQ(csv.code, 0);
  std::string converted = text.out;
  for (auto& ch : converted) {
    if (ch == ' ') ch = ',';
  }
  EXPECT_EQ(converted, csv.out);
  EXPECT_NE(csv.out.find("22,6,6,6,yes"), std::string::npos);
  EXPECT_NE(csv.out.find("27,5,5,5,yes"), std::string::npos);
}

TEST_F(CliTest, Formulas) {
  auto zn = run({"zn-formula", "--n", "18"});
  EXPECT_EQ(zn.code, 0);
  EXPECT_NE(zn.out.find("aw(Z_n,3)=5"), std::string::npos);
  EXPECT_NE(zn.out.find("tight=yes"), std::string::npos);

  auto unclassified = run({"zn-formula", "--n", "202"});
  EXPECT_EQ(unclassified.code, awtk::cli::kInvalidInput);
  EXPECT_NE(unclassified.out.find("reason=unclassified:p=101:limit=100"), std::string::npos);

  auto p = run({"classify-prime", "--p", "13", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(p.out)["aw"], 3);
  EXPECT_EQ(run({"classify-prime", "--p", "15"}).code, awtk::cli::kInvalidInput);
  EXPECT_EQ(run({"classify-prime", "--p", "19", "--limit", "17"}).code, awtk::cli::kInvalidInput);

  EXPECT_EQ(run({"f", "--n", "22"}, false).out, "f(22)=6 m=3\n");
  EXPECT_EQ(run({"f", "--n", "1"}, false).out, "f(1)=2 m=-\n");
}

TEST_F(CliTest, Constructions) {
  auto emit = path("c.txt");
  auto r = run({"construct", "--n", "26", "--emit", emit}, false);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"verified\":true"), std::string::npos);
  EXPECT_EQ(run({"check-coloring", "--file", emit}, false).code, 0);

  auto b = run({"behrend", "--n", "200", "--format", "json"}, false);
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(nlohmann::json::parse(b.out)["ap_free"], true);

  auto s = run({"special", "--q", "1"}, false);
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out, "q=1 n=8 fillers=2 special=2 rainbow_free=2 rate=1.0000\n");
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({}, false).code, awtk::cli::kInvalidInput);
  EXPECT_EQ(run({"solve", "--n", "0"}).code, awtk::cli::kInvalidInput);
  EXPECT_EQ(run({"solve", "--n", "9", "--k", "2"}).code, awtk::cli::kInvalidInput);
  EXPECT_EQ(run({"solve", "--n", "9", "--group", "torus"}).code, awtk::cli::kInvalidInput);
  EXPECT_EQ(run({"dichotomy", "--N", "1"}, false).code, awtk::cli::kInvalidInput);
  EXPECT_EQ(run({"solve", "--group", "cyclic", "--n", "79", "--timeout", "0.001", "--no-cache"}, false).code,
            awtk::cli::kTimeout);
  EXPECT_EQ(run({"--help"}, false).code, awtk::cli::kOk);
}

TEST_F(CliTest, TimeoutCellsShowQuestionMark) {
  auto r = run({"table", "--n-min", "25", "--n-max", "25", "--timeout", "0.000001", "--no-cache"}, false);
  EXPECT_NE(r.out.find("?"), std::string::npos);
  EXPECT_NE(r.err.find("timeout: n=25"), std::string::npos);
  EXPECT_EQ(r.code, 0);
}
