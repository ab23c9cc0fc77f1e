#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;
using irrstrength::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("irrstrength_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, BookPrintsEdgeList) {
  auto r = invoke({"book", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "4 5\n0 1\n0 2\n0 3\n1 2\n1 3\n");
}

TEST_F(CliTest, LabelTriangle) {
  auto r = invoke({"label", "--n", "1", "--theorem", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            R"({"order":3,"edges":[[0,1],[0,2],[1,2]],"labels":[1,2,3],)"
            R"("weights":[3,4,5],"residues":[0,1,2],"k":3,"mode":"modular"})"
            "\n");
}

TEST_F(CliTest, LabelInfiniteClassFails) {
  auto r = invoke({"label", "--n", "4", "--theorem", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("no modular irregular labeling"), std::string::npos);
}

TEST_F(CliTest, LabelThenVerifyRoundTrip) {
  for (int theorem : {1, 2}) {
    for (int n = 1; n <= 30; ++n) {
      if (theorem == 2 && n % 4 == 0) continue;
      auto graph = path("g.txt");
      auto cert = path("c.json");
      ASSERT_EQ(invoke({"book", "--n", std::to_string(n), "--out", graph}).code, 0);
      ASSERT_EQ(invoke({"label", "--n", std::to_string(n), "--theorem", std::to_string(theorem),
                        "--out", cert})
                    .code,
                0);
      auto v = invoke({"verify", "--graph", graph, "--cert", cert, "--mode",
                       theorem == 1 ? "irregular" : "modular"});
      EXPECT_EQ(v.code, 0) << theorem << " " << n << v.err;
      EXPECT_EQ(v.out, "ok\n");
    }
  }
}

TEST_F(CliTest, VerifyReportsCollision) {
  auto graph = write("g.txt", "3 3\n0 1\n0 2\n1 2\n");
  auto cert = write("c.json",
                    R"({"order":3,"edges":[[0,1],[0,2],[1,2]],"labels":[1,1,1],)"
                    R"("weights":[2,2,2],"residues":[2,2,2],"k":1,"mode":"irregular"})");
  auto r = invoke({"verify", "--graph", graph, "--cert", cert, "--mode", "irregular"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err, "fail: duplicate-weight(0,1)\n");
  auto m = invoke({"verify", "--graph", graph, "--cert", cert, "--mode", "modular"});
  EXPECT_EQ(m.code, 1);
  EXPECT_EQ(m.err, "fail: residue-collision(0,1)\n");
}

TEST_F(CliTest, VerifyRejectsMismatchedGraphAndTamperedWeights) {
  auto cert = path("c.json");
  ASSERT_EQ(invoke({"label", "--n", "3", "--theorem", "1", "--out", cert}).code, 0);
  auto other = write("g.txt", "3 3\n0 1\n0 2\n1 2\n");
  EXPECT_EQ(invoke({"verify", "--graph", other, "--cert", cert, "--mode", "irregular"}).code, 1);

  auto graph = write("b1.txt", "3 3\n0 1\n0 2\n1 2\n");
  auto tampered = write("t.json",
                        R"({"order":3,"edges":[[0,1],[0,2],[1,2]],"labels":[1,2,3],)"
                        R"("weights":[3,4,6],"residues":[0,1,0],"k":3,"mode":"irregular"})");
  auto r = invoke({"verify", "--graph", graph, "--cert", tampered, "--mode", "irregular"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("do not match"), std::string::npos);
}

TEST_F(CliTest, Bound) {
  auto graph = path("b5.txt");
  ASSERT_EQ(invoke({"book", "--n", "5", "--out", graph}).code, 0);
  auto r = invoke({"bound", "--graph", graph});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "lower_bound_s 3\nmodular_infinite false\nlower_bound_ms 3\n");

  auto b4 = path("b4.txt");
  ASSERT_EQ(invoke({"book", "--n", "4", "--out", b4}).code, 0);
  EXPECT_EQ(invoke({"bound", "--graph", b4}).out,
            "lower_bound_s 3\nmodular_infinite true\nlower_bound_ms inf\n");

  auto k2 = write("k2.txt", "2 1\n0 1\n");
  EXPECT_EQ(invoke({"bound", "--graph", k2}).code, 2);
}

TEST_F(CliTest, SolveInfiniteAndFinite) {
  auto b4 = path("b4.txt");
  ASSERT_EQ(invoke({"book", "--n", "4", "--out", b4}).code, 0);
  auto r = invoke({"solve", "--graph", b4, "--mode", "ms"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"mode\":\"ms\",\"outcome\":\"infinite\",\"reason\":\"order is 2 mod 4\"}\n");
  EXPECT_NE(r.err.find("nodes=0"), std::string::npos);

  auto b5 = path("b5.txt");
  ASSERT_EQ(invoke({"book", "--n", "5", "--out", b5}).code, 0);
  auto s = invoke({"solve", "--graph", b5, "--mode", "ms", "--threads", "2"});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out.substr(0, 36), R"({"mode":"ms","outcome":"finite","k":)");
  EXPECT_EQ(s.out.substr(36, 1), "4");

  EXPECT_EQ(invoke({"solve", "--graph", b5, "--mode", "s", "--kmax", "2"}).code, 2);
}

TEST_F(CliTest, ThreadsFromEnvironment) {
  auto b5 = path("b5.txt");
  ASSERT_EQ(invoke({"book", "--n", "5", "--out", b5}).code, 0);
  ::setenv("IRRSTRENGTH_THREADS", "3", 1);
  auto a = invoke({"solve", "--graph", b5, "--mode", "s"});
  ::setenv("IRRSTRENGTH_THREADS", "0", 1);
  auto bad = invoke({"solve", "--graph", b5, "--mode", "s"});
  ::unsetenv("IRRSTRENGTH_THREADS");
  auto b = invoke({"solve", "--graph", b5, "--mode", "s"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, Table) {
  auto r = invoke({"table", "--from", "1", "--to", "8", "--oracle-upto", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "n\ts\tms\ts_oracle\tms_oracle\n"
            "1\t3\t3\t3\t3\n"
            "2\t2\t2\t2\t2\n"
            "3\t2\t2\t2\t2\n"
            "4\t3\tinf\t3\tinf\n"
            "5\t3\t4\t3\t4\n"
            "6\t4\t4\t4\t4\n"
            "7\t4\t4\t-\t-\n"
            "8\t5\tinf\t-\t-\n");
}

TEST_F(CliTest, ExportDot) {
  auto cert = path("c.json");
  ASSERT_EQ(invoke({"label", "--n", "1", "--theorem", "1", "--out", cert}).code, 0);
  auto r = invoke({"export", "--cert", cert, "--format", "dot"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0 -- 1 [label=\"1\"];"), std::string::npos);
  EXPECT_NE(r.out.find("2 [label=\"5\"];"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"book"}).code, 2);
  EXPECT_EQ(invoke({"book", "--n", "0"}).code, 2);
  EXPECT_EQ(invoke({"book", "--n", "3", "--bogus"}).code, 2);
  EXPECT_EQ(invoke({"label", "--n", "3", "--theorem", "3"}).code, 2);
  EXPECT_EQ(invoke({"export", "--cert", "x", "--format", "png"}).code, 2);
  EXPECT_EQ(invoke({"table", "--from", "5", "--to", "2"}).code, 2);
  EXPECT_EQ(invoke({"book", "--help"}).code, 0);
}

TEST_F(CliTest, IoAndFormatErrors) {
  EXPECT_EQ(invoke({"bound", "--graph", path("missing.txt")}).code, 3);
  auto bad = write("bad.txt", "3 1\n2 1\n");
  auto r = invoke({"bound", "--graph", bad});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
  auto junk = write("junk.json", "{not json");
  EXPECT_EQ(invoke({"export", "--cert", junk}).code, 3);
  auto graph = write("g.txt", "3 3\n0 1\n0 2\n1 2\n");
  EXPECT_EQ(invoke({"verify", "--graph", graph, "--cert", junk, "--mode", "modular"}).code, 3);
}
