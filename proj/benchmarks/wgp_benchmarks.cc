// Copyright 2026 The WGP Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "wgp/bounds.h"
#include "wgp/generators.h"
#include "wgp/oracle.h"
#include "wgp/schedulers.h"

namespace wgp {
namespace {

Instance Grid(int side, int packets) {
  StandardParams p;
  p.topology = Topology::kGrid;
  p.rows = side;
  p.cols = side;
  p.packets = packets;
  p.origin = OriginPolicy::kUniform;
  p.release = ReleasePolicy::kSpaced;
  return GenerateStandard(p, 1);
}

void BM_AllPairsDistances(benchmark::State& state) {
  const Instance inst = Grid(static_cast<int>(state.range(0)), 1);
  const auto edges = inst.network().edges();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        AllPairsDistances(inst.network().node_count(), edges));
  }
  state.SetComplexityN(inst.network().node_count());
}
BENCHMARK(BM_AllPairsDistances)->RangeMultiplier(2)->Range(4, 32)->Complexity();

void BM_FifoGrid(benchmark::State& state) {
  const Instance inst = Grid(10, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Fifo(inst));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FifoGrid)->RangeMultiplier(4)->Range(16, 1024);

void BM_FifoTrap(benchmark::State& state) {
  const Instance inst = GenerateTrap(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Fifo(inst));
}
BENCHMARK(BM_FifoTrap)->Arg(8)->Arg(64)->Arg(512);

void BM_UpperBoundTable(benchmark::State& state) {
  const Instance inst = Grid(10, static_cast<int>(state.range(0)));
  const GreedyRun run = Fifo(inst);
  for (auto _ : state) benchmark::DoNotOptimize(UpperBoundTable(inst, run));
}
BENCHMARK(BM_UpperBoundTable)->Arg(64)->Arg(256);

void BM_SolveExact(benchmark::State& state) {
  StandardParams p;
  p.topology = Topology::kRandom;
  p.nodes = 8;
  p.edge_probability = 0.4;
  p.packets = static_cast<int>(state.range(0));
  p.origin = OriginPolicy::kUniform;
  const Instance inst = GenerateStandard(p, 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolveExact(inst, Objective::kMaxFlow));
  }
}
BENCHMARK(BM_SolveExact)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_MaxInducedMatching(benchmark::State& state) {
  const PlantedGraph planted = PlantInducedMatching(
      3, static_cast<int>(state.range(0)), static_cast<int>(state.range(0)),
      0.3, 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(MaxInducedMatchingSize(planted.graph));
  }
}
BENCHMARK(BM_MaxInducedMatching)->DenseRange(2, 10, 4);

}  // namespace
}  // namespace wgp

// The packaged benchmark_main archive is LTO bytecode from another compiler
// release, so the entry point lives here.
BENCHMARK_MAIN();
