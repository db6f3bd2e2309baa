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

#include <set>
#include <stdexcept>

#include "dconv/classes.hpp"
#include "dconv/lab.hpp"

namespace dconv {
namespace {

TEST(Registry, RecordsAreIndexed) {
  const auto& reg = counterexample_registry();
  EXPECT_EQ(reg.size(), 10u);
  std::set<std::string> ids;
  for (const auto& rec : reg) {
    EXPECT_TRUE(ids.insert(rec.id).second) << rec.id;
    EXPECT_EQ(find_record(rec.id), &rec);
    EXPECT_FALSE(rec.inputs.empty()) << rec.id;
  }
  for (const char* id : {"EX2.2", "EX3.1", "EX3.1D", "EX3.2", "EX3.3", "EX3.4", "EX3.5", "EX3.6", "EX4.1", "EX4.2"}) {
    EXPECT_TRUE(ids.count(id)) << id;
  }
  EXPECT_EQ(find_record("EX9.9"), nullptr);
}

class RecordReplay : public ::testing::TestWithParam<std::string> {};

TEST_P(RecordReplay, Passes) {
  const CounterexampleRecord* rec = find_record(GetParam());
  ASSERT_NE(rec, nullptr);
  RecordReport report = replay_record(*rec);
  EXPECT_EQ(report.id, rec->id);
  EXPECT_FALSE(report.checks.empty());
  for (const RecordCheck& c : report.checks) EXPECT_TRUE(c.ok) << c.what;
  EXPECT_TRUE(report.passed);
}

INSTANTIATE_TEST_SUITE_P(All, RecordReplay,
                         ::testing::Values("EX2.2", "EX3.1", "EX3.1D", "EX3.2", "EX3.3", "EX3.4", "EX3.5", "EX3.6",
                                           "EX4.1", "EX4.2"),
                         [](const auto& info) {
                           std::string name = info.param;
                           for (char& ch : name) {
                             if (ch == '.') ch = '_';
                           }
                           return name;
                         });

TEST(Registry, DocumentedWitnessesRecheck) {
  for (const auto& rec : counterexample_registry()) {
    if (!rec.witness || rec.operation == "argmin") continue;
    ASSERT_FALSE(rec.negative.empty()) << rec.id;
  }
  const CounterexampleRecord* ex = find_record("EX3.4");
  ASSERT_TRUE(ex->witness);
  EXPECT_EQ(ex->witness->x, (Point{0, 1, 1}));
  EXPECT_EQ(ex->witness->y, (Point{1, 1, 0}));
}

TEST(Registry, ReplayExceptionsBecomeFailures) {
  CounterexampleRecord rec{"BROKEN", "raises", "aggregate", {}, {}, std::nullopt,
                           []() -> RecordReport { throw std::runtime_error("boom"); }};
  RecordReport report = replay_record(rec);
  EXPECT_FALSE(report.passed);
  EXPECT_EQ(report.id, "BROKEN");
  ASSERT_EQ(report.checks.size(), 1u);
  EXPECT_NE(report.checks[0].what.find("boom"), std::string::npos);
}

TEST(Registry, RunsEveryRecord) {
  std::vector<RecordReport> all = run_counterexamples();
  EXPECT_EQ(all.size(), counterexample_registry().size());
  for (const auto& r : all) EXPECT_TRUE(r.passed) << r.id;
}

}  // namespace
}  // namespace dconv
