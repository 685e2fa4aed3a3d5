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

// Exact solvers for small instances.
//
// SolveExact finds a unit-speed schedule minimizing the maximum completion
// time or the maximum flow time. Packets may take any route, not only
// shortest paths, and may wait anywhere. The search runs iterative deepening
// on the objective value: for each candidate value it fixes a deadline per
// packet and runs a depth-first search over rounds, branching on every set
// of pairwise-compatible calls. States (packet positions) that failed at
// round t are remembered and pruned at any round >= t, since a later arrival
// at the same positions can be simulated by waiting.
//
// The module also holds a maximum induced matching solver for bipartite
// graphs. With interference radius 1, a set of U->V calls is pairwise
// compatible exactly when the corresponding edges form an induced matching.

#ifndef WGP_ORACLE_H_
#define WGP_ORACLE_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "wgp/model.h"

namespace wgp {

enum class Objective { kMaxCompletion, kMaxFlow };

std::string_view ObjectiveName(Objective objective);
Rational ObjectiveValue(const ScheduleMetrics& metrics, Objective objective);

struct SearchState {
  Round round = 0;
  // One entry per packet; delivered packets sit at the sink and unreleased
  // packets at their origin.
  std::vector<NodeId> positions;
};

// Every call (j, u, v) for a released, undelivered packet j at u and every
// neighbor v of u, ordered by (packet, to).
std::vector<Call> CandidateCalls(const SearchState& state,
                                 const Instance& instance);

// All inclusion-maximal pairwise-compatible subsets of `candidates`, each
// sorted, in lexicographic order. At most 64 candidates.
std::vector<std::vector<Call>> MaximalCompatibleSets(
    std::span<const Call> candidates, const Network& network);

// All pairwise-compatible subsets of `candidates`, the empty set included,
// each sorted, in lexicographic order. At most 64 candidates.
std::vector<std::vector<Call>> CompatibleSets(std::span<const Call> candidates,
                                              const Network& network);

// The maximal compatible sets over CandidateCalls(state), plus the empty
// (wait) set; lexicographic order, so the empty set comes first.
std::vector<std::vector<Call>> EnumerateCallSets(const SearchState& state,
                                                 const Instance& instance);

inline constexpr std::int64_t kDefaultNodeBudget = 10'000'000;

struct OracleOptions {
  // Search nodes across all deepening iterations.
  std::int64_t node_budget = kDefaultNodeBudget;
  int max_packets = 5;
  int max_nodes = 12;
  // Prune states whose residual packing lower bound exceeds the deadlines.
  bool use_packing_bound = true;
};

// WGP_NODE_BUDGET if set to a positive integer, `fallback` otherwise.
std::int64_t NodeBudgetFromEnvironment(std::int64_t fallback);

enum class OracleStatus { kOptimal, kUnknown };

struct OracleResult {
  OracleStatus status = OracleStatus::kUnknown;
  // Optimal value; meaningful only for kOptimal.
  Rational value{0};
  // An optimal schedule (sigma = 1); empty for kUnknown.
  Schedule schedule;
  // Proven bounds. Equal to `value` for kOptimal.
  Rational lower_bound{0};
  Rational upper_bound{0};
  std::int64_t nodes_explored = 0;
};

// Throws InvalidArgumentError if the instance exceeds the size guards.
OracleResult SolveExact(const Instance& instance, Objective objective,
                        const OracleOptions& options = {});

////////////////////////////////////////////////////////////////////////////////
// Induced matchings
////////////////////////////////////////////////////////////////////////////////

// Bipartite graph with sides U = {0..u_count-1} and V = {0..v_count-1}.
// An edge (a, b) joins U-node a and V-node b.
struct BipartiteGraph {
  int u_count = 0;
  int v_count = 0;
  std::vector<std::pair<int, int>> edges;
};

// Throws InvalidArgumentError for out-of-range endpoints or duplicate edges.
void CheckBipartite(const BipartiteGraph& graph);

// True iff `matching` is a set of distinct graph edges, no two sharing an
// endpoint or joined by a graph edge.
bool IsInducedMatching(const BipartiteGraph& graph,
                       std::span<const std::pair<int, int>> matching);

// A maximum induced matching, found by branch and bound over the edges.
std::vector<std::pair<int, int>> MaximumInducedMatching(
    const BipartiteGraph& graph);

int MaxInducedMatchingSize(const BipartiteGraph& graph);

}  // namespace wgp

#endif  // WGP_ORACLE_H_
