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


#include <benchmark/benchmark.h>

#include "dconv/classes.hpp"
#include "dconv/hull.hpp"
#include "dconv/lab.hpp"
#include "dconv/network.hpp"
#include "dconv/ops.hpp"

namespace dconv {
namespace {

LatticeFn instance(ClassLabel label, std::size_t dim, std::size_t max_points) {
  GeneratorConfig c;
  c.label = label;
  c.dim = dim;
  c.window = Window::cube(dim, -3, 3);
  c.seed = 1;
  c.max_points = max_points;
  Instance in = generate(c);
  if (auto* s = std::get_if<LatticeSet>(&in)) return LatticeFn::indicator(*s);
  return std::get<LatticeFn>(in);
}

void check(benchmark::State& state, ClassLabel label) {
  LatticeFn f = instance(label, static_cast<std::size_t>(state.range(0)), 150);
  for (auto _ : state) {
    if (is_set_label(label)) {
      benchmark::DoNotOptimize(check_set(f.dom(), label));
    } else {
      benchmark::DoNotOptimize(check_fn(f, label));
    }
  }
  state.counters["points"] = static_cast<double>(f.size());
}

void BM_LNatFn(benchmark::State& s) { check(s, ClassLabel::LNatFn); }
void BM_MNatFn(benchmark::State& s) { check(s, ClassLabel::MNatFn); }
void BM_IntegrallyConvexFn(benchmark::State& s) { check(s, ClassLabel::IntegrallyConvexFn); }
void BM_MultimodularFn(benchmark::State& s) { check(s, ClassLabel::MultimodularFn); }
void BM_JumpMNatFn(benchmark::State& s) { check(s, ClassLabel::JumpMNatFn); }
void BM_GlobalDMCSet(benchmark::State& s) { check(s, ClassLabel::GlobalDMCSet); }

BENCHMARK(BM_LNatFn)->DenseRange(2, 4);
BENCHMARK(BM_MNatFn)->DenseRange(2, 4);
BENCHMARK(BM_IntegrallyConvexFn)->DenseRange(2, 3);
BENCHMARK(BM_MultimodularFn)->DenseRange(2, 4);
BENCHMARK(BM_JumpMNatFn)->DenseRange(2, 3);
BENCHMARK(BM_GlobalDMCSet)->DenseRange(2, 4);

void BM_LocalHull(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  LatticeSet s(n, Window::cube(n, 0, 1).points());
  HalfPoint x(Point::ones(n));
  for (auto _ : state) benchmark::DoNotOptimize(in_local_hull(s, x));
}
BENCHMARK(BM_LocalHull)->DenseRange(1, 4);

void BM_SplitInduction(benchmark::State& state) {
  SplitSpec spec{{2, 1}};
  Window out = Window::cube(3, -2, 2);
  LatticeFn f = instance(ClassLabel::MNatFn, 2, 25);
  Network net = split_network(spec, out);
  for (auto _ : state) benchmark::DoNotOptimize(induce_fn(f, net));
}
BENCHMARK(BM_SplitInduction);

}  // namespace
}  // namespace dconv

BENCHMARK_MAIN();
