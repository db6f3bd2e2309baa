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

#include "dconv/error.hpp"
#include "dconv/io.hpp"
#include "dconv/lab.hpp"
#include "json.hpp"
#include "oracles.hpp"

namespace dconv {
namespace {

void expect_round_trip(const Document& doc) {
  std::string text = print_document(doc);
  Document back = parse_document(text);
  EXPECT_EQ(kind_of(back), kind_of(doc));
  EXPECT_TRUE(back == doc) << text;
  EXPECT_EQ(print_document(back), text);
}

TEST(Io, RoundTripsEveryKind) {
  expect_round_trip(LatticeSet(2, {Point{0, 1}, Point{-3, 2}}));
  expect_round_trip(LatticeSet(3, {Point{0, 1, 5}}, true));
  expect_round_trip(LatticeFn(2, {{Point{0, 1}, Rational(-7, 3)}, {Point{4, 4}, 2}}));
  expect_round_trip(LatticeFn(2, {{Point{1, 0}, Rational(1, 2)}}, true, Rational(-3, 2)));
  expect_round_trip(Network({"u", "v", "w"},
                            {{"u", "v", -1, 2, ArcCost::table({1, 0, 0, 2})}, {"v", "w", 0, 3, ArcCost::zero()}},
                            {"u"}, {"w"}));
  expect_round_trip(SplitSpec{{2, 1, 3}});
  expect_round_trip(PartitionSpec{{{0, 2}, {1}, {3, 4}}});
  expect_round_trip(Window(Point{-1, 0}, Point{2, 2}));
  Witness w;
  w.kind = WitnessKind::Exchange;
  w.x = Point{1, 0};
  w.y = Point{0, 1};
  w.i = 1;
  expect_round_trip(VerdictDocument{ClassLabel::MNatSet, Verdict{false, w}});
  expect_round_trip(VerdictDocument{ClassLabel::LNatFn, Verdict{true, std::nullopt}});
  expect_round_trip(ReportDocument{report_document(run_counterexamples())});
}

TEST(Io, GeneratedInstancesRoundTrip) {
  for (ClassLabel label : all_labels()) {
    GeneratorConfig c;
    c.label = label;
    c.dim = 3;
    c.window = Window::cube(3, -2, 2);
    c.seed = 99;
    std::visit([](const auto& x) { expect_round_trip(Document(x)); }, generate(c));
  }
}

TEST(Io, Format) {
  nlohmann::json j = nlohmann::json::parse(print_document(LatticeFn(1, {{Point{2}, Rational(3, 4)}})));
  EXPECT_EQ(j["kind"], "fn");
  EXPECT_EQ(j["version"], 1);
  EXPECT_EQ(j["entries"][0]["v"], "3/4");
  EXPECT_EQ(j["entries"][0]["x"][0], 2);
  nlohmann::json p = nlohmann::json::parse(print_document(PartitionSpec{{{0, 1}}}));
  EXPECT_EQ(p["groups"][0][1], 2);
  std::string text = print_document(SplitSpec{{1}});
  EXPECT_EQ(text.back(), '\n');
}

TEST(Io, InfiniteValuesLeaveTheDomain) {
  LatticeFn f = parse_fn(R"({"kind": "fn", "version": 1, "dim": 1, "lifted": false, "ramp": "0",
                             "entries": [{"x": [0], "v": "1/2"}, {"x": [1], "v": "inf"}]})");
  EXPECT_EQ(f.size(), 1u);
  EXPECT_TRUE(f(Point{1}).is_infinite());
}

TEST(Io, RejectsMalformedDocuments) {
  const char* bad[] = {
      "not json",
      R"({"kind": "set"})",
      R"({"kind": "set", "version": 2, "dim": 1, "lifted": false, "points": [[0]]})",
      R"({"kind": "set", "version": 1, "dim": 2, "lifted": false, "points": [[0]]})",
      R"({"kind": "fn", "version": 1, "dim": 1, "lifted": false, "ramp": "0", "entries": [{"x": [0], "v": "a"}]})",
      R"({"kind": "shape", "version": 1})",
      R"({"kind": "partition-spec", "version": 1, "dim": 2, "groups": [[1], [1, 2]]})",
      R"({"kind": "partition-spec", "version": 1, "dim": 2, "groups": [[0, 1]]})",
      R"({"kind": "window", "version": 1, "dim": 1, "lo": [2], "hi": [1]})",
  };
  for (const char* text : bad) EXPECT_THROW(parse_document(text), InputError) << text;
  EXPECT_THROW(parse_set(print_document(SplitSpec{{1}})), InputError);
}

TEST(Io, InfiniteCapacityHasRemediationHint) {
  try {
    parse_document(testing::read_data("unbounded.network.json"));
    FAIL() << "accepted an infinite capacity";
  } catch (const InputError& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("finite"), std::string::npos) << msg;
  }
}

TEST(Io, NonConvexCostIsRejected) {
  const char* text = R"({"kind": "network", "version": 1, "vertices": ["u", "w"], "entrance": ["u"], "exit": ["w"],
    "arcs": [{"tail": "u", "head": "w", "lower": 0, "upper": 2,
              "cost": [{"t": 0, "v": "0"}, {"t": 1, "v": "2"}, {"t": 2, "v": "1"}]}]})";
  EXPECT_THROW(parse_document(text), InputError);
}

TEST(Io, ReportsAreCanonical) {
  ClosureReport r = closure_matrix(1, 3, 2);
  nlohmann::json j = nlohmann::json::parse(report_document(r));
  EXPECT_EQ(j["report"], "closure-matrix");
  EXPECT_EQ(j["cells"].size(), 84u);
  nlohmann::json k = nlohmann::json::parse(report_document(run_counterexamples()));
  EXPECT_EQ(k["report"], "counterexamples");
}

}  // namespace
}  // namespace dconv
