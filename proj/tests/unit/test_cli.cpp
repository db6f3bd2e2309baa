// Copyright 2026 The dconv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "dconv/io.hpp"
#include "json.hpp"
#include "oracles.hpp"

namespace dconv {
namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "dconv");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  CliResult r;
  r.code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(DCONV_TEST_DATA_DIR) + "/" + name; }

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("dconv-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const Document& doc) {
    std::string path = (dir_ / name).string();
    std::ofstream(path) << print_document(doc);
    return path;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, CheckReportsWitnessAndExitCode) {
  CliResult r = run({"check", data("lnat_aggregate.set.json"), "--class", "lnat-set"});
  EXPECT_EQ(r.code, 1) << r.err;
  auto doc = std::get<VerdictDocument>(parse_document(r.out));
  EXPECT_FALSE(doc.verdict.member);
  ASSERT_TRUE(doc.verdict.witness);
  EXPECT_EQ(doc.verdict.witness->x, (Point{0, 1, 1}));
  EXPECT_EQ(doc.verdict.witness->y, (Point{1, 1, 0}));
}

TEST_F(Cli, CheckMembers) {
  EXPECT_EQ(run({"check", data("singleton.set.json"), "--class", "m-set"}).code, 0);
  CliResult r = run({"check", data("parity_pairs.fn.json"), "--class", "jump-m-fn"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(std::get<VerdictDocument>(parse_document(r.out)).verdict.member);
}

TEST_F(Cli, CheckInputErrors) {
  EXPECT_EQ(run({"check", data("singleton.set.json"), "--class", "lnat-fn"}).code, 2);
  EXPECT_EQ(run({"check", data("singleton.set.json"), "--class", "round"}).code, 2);
  EXPECT_EQ(run({"check", data("missing.json"), "--class", "m-set"}).code, 2);
  EXPECT_EQ(run({"check", data("laminar_tree.network.json"), "--class", "m-set"}).code, 2);
  EXPECT_EQ(run({"check", data("singleton.set.json")}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST_F(Cli, CheckWithWindowCutsLiftedInput) {
  std::string s = write("l.json", LatticeSet(2, {Point{0, 0}}, true));
  std::string w = write("w.json", Window::cube(2, -1, 1));
  EXPECT_EQ(run({"check", s, "--class", "l-set"}).code, 0);
  CliResult r = run({"check", s, "--class", "lnat-set", "--window", w});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST_F(Cli, OpAggregate) {
  CliResult r = run({"op", "aggregate", data("ic_input.set.json"), "--spec", data("groups_13_24.partition.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_set(r.out), parse_set(testing::read_data("ic_output.set.json")));
}

TEST_F(Cli, OpSplitIdentity) {
  std::string spec = write("spec.json", SplitSpec{{1, 1, 1}});
  std::string win = write("w.json", Window::cube(3, -2, 2));
  CliResult r = run({"op", "split", data("singleton.set.json"), "--spec", spec, "--window", win});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_set(r.out), parse_set(testing::read_data("singleton.set.json")));
  EXPECT_EQ(run({"op", "split", data("singleton.set.json"), "--spec", spec}).code, 2);
}

TEST_F(Cli, OpConvolveIndicators) {
  LatticeSet a(2, {Point{0, 0}, Point{1, 0}});
  LatticeSet b(2, {Point{0, 0}, Point{0, 1}, Point{2, 2}});
  std::string fa = write("a.json", LatticeFn::indicator(a));
  std::string fb = write("b.json", LatticeFn::indicator(b));
  CliResult r = run({"op", "convolve", fa, fb});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_fn(r.out), LatticeFn::indicator(minkowski_sum_set(a, b)));
  CliResult m = run({"op", "minkowski", write("sa.json", a), write("sb.json", b)});
  ASSERT_EQ(m.code, 0) << m.err;
  EXPECT_EQ(parse_set(m.out), minkowski_sum_set(a, b));
  EXPECT_EQ(run({"op", "convolve", fa}).code, 2);
  EXPECT_EQ(run({"op", "convolve", fa, write("sc.json", a)}).code, 2);
  EXPECT_EQ(run({"op", "rotate", fa}).code, 2);
}

TEST_F(Cli, OpDirectSumWritesOutFile) {
  std::string out = path("sum.json");
  CliResult r = run({"op", "direct-sum", data("singleton.set.json"), data("singleton.set.json"), "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(parse_set(buf.str()), LatticeSet(6, {Point{2, -1, 0, 2, -1, 0}}));
}

TEST_F(Cli, InduceLaminarTree) {
  CliResult r = run({"induce", "--network", data("laminar_tree.network.json"), "--input", data("zero_on_u.fn.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  LatticeFn g = parse_fn(r.out);
  Window::cube(3, -2, 2).for_each([&](const Point& y) { EXPECT_EQ(g(y), testing::laminar_tree_value(y)); });
}

TEST_F(Cli, InduceIdentityAndSplitNetworks) {
  Network id({"u1", "u2", "w1", "w2"}, {{"u1", "w1", -3, 3, ArcCost::zero()}, {"u2", "w2", -3, 3, ArcCost::zero()}},
             {"u1", "u2"}, {"w1", "w2"});
  LatticeSet s(2, {Point{0, 0}, Point{1, 1}, Point{2, 1}});
  std::string sp = write("s.json", s);
  CliResult r = run({"induce", "--network", write("id.json", id), "--input", sp});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_set(r.out), s);

  SplitSpec spec{{2, 1}};
  Window w = Window::cube(3, -1, 2);
  CliResult via_net = run({"induce", "--network", write("split.json", split_network(spec, w)), "--input", sp});
  CliResult via_op = run({"op", "split", sp, "--spec", write("spec.json", spec), "--window", write("w.json", w)});
  ASSERT_EQ(via_net.code, 0) << via_net.err;
  ASSERT_EQ(via_op.code, 0) << via_op.err;
  EXPECT_EQ(parse_set(via_net.out), parse_set(via_op.out));
}

TEST_F(Cli, InduceRejectsInfiniteCapacity) {
  CliResult r = run({"induce", "--network", data("unbounded.network.json"), "--input", data("zero_on_u.fn.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("finite"), std::string::npos) << r.err;
}

TEST_F(Cli, MatrixNeedsSeedAndIsDeterministic) {
  EXPECT_EQ(run({"matrix", "--trials", "1"}).code, 2);
  CliResult a = run({"matrix", "--trials", "1", "--seed", "0", "--max-dim", "3", "--json"});
  CliResult b = run({"matrix", "--trials", "1", "--seed", "0", "--max-dim", "3", "--json"});
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  nlohmann::json j = nlohmann::json::parse(a.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  CliResult grid = run({"matrix", "--trials", "1", "--seed", "0", "--out", path("m.json")});
  EXPECT_EQ(grid.code, 0);
  EXPECT_NE(grid.out.find("N EX3.4"), std::string::npos);
  EXPECT_TRUE(fs::exists(path("m.json")));
}

TEST_F(Cli, Examples) {
  CliResult one = run({"examples", "--run", "EX3.6"});
  EXPECT_EQ(one.code, 0) << one.out;
  EXPECT_NE(one.out.find("EX3.6 PASS"), std::string::npos);
  CliResult all = run({"examples", "--run", "all", "--json"});
  EXPECT_EQ(all.code, 0);
  EXPECT_EQ(nlohmann::json::parse(all.out)["records"].size(), 10u);
  EXPECT_EQ(run({"examples", "--run", "EX7.7"}).code, 2);
}

TEST_F(Cli, Help) {
  CliResult r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("matrix"), std::string::npos);
}

}  // namespace
}  // namespace dconv
