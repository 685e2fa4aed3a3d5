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

// Instance generators: standard topologies, the four-layer induced-matching
// network, and the shortest-path trap, together with the hand-built
// schedules that go with the last two.

#ifndef WGP_GENERATORS_H_
#define WGP_GENERATORS_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wgp/model.h"
#include "wgp/oracle.h"

namespace wgp {

enum class Topology { kLine, kStar, kGrid, kRandom };
enum class OriginPolicy { kFixed, kUniform, kEachNode };
enum class ReleasePolicy { kZero, kSpaced };

// Parses "line", "star", ...; throws InvalidArgumentError.
Topology ParseTopology(std::string_view name);
OriginPolicy ParseOriginPolicy(std::string_view name);
ReleasePolicy ParseReleasePolicy(std::string_view name);
std::string_view TopologyName(Topology topology);

// Node 0 is always the sink.
//   line:   `nodes` nodes on a path 0-1-...-(nodes-1).
//   star:   center 0 with `nodes` - 1 leaves.
//   grid:   `rows` x `cols` lattice, node r*cols + c.
//   random: G(nodes, edge_probability), redrawn until connected.
// Origins: kFixed puts every packet at `origin_node` (default: the highest
// node id); kUniform draws non-sink nodes uniformly; kEachNode places one
// packet on every non-sink node and ignores `packets`.
// Releases: kZero, or kSpaced with geometric gaps of mean `mean_gap`.
struct StandardParams {
  Topology topology = Topology::kLine;
  int nodes = 3;
  int rows = 2;
  int cols = 2;
  double edge_probability = 0.5;
  int interference_radius = 1;
  int packets = 1;
  OriginPolicy origin = OriginPolicy::kFixed;
  NodeId origin_node = kNoNode;
  ReleasePolicy release = ReleasePolicy::kZero;
  double mean_gap = 2.0;
};

// Deterministic in (params, seed). Throws InvalidArgumentError.
Instance GenerateStandard(const StandardParams& params, std::uint64_t seed);

////////////////////////////////////////////////////////////////////////////////
// Four-layer induced-matching network
////////////////////////////////////////////////////////////////////////////////

// Node layout: source 0, U-node a at 1 + a, V-node b at 1 + |U| + b, and the
// sink last. The source sees all of U, the sink all of V, U and V are
// cliques, and U-V edges copy the bipartite graph. d_I = 1. Packet h*k + i
// is the i-th packet of group h, released at (k + 1) * h at the source.
struct IbmReduction {
  Instance instance;
  BipartiteGraph graph;
  int k = 0;
  int phases = 0;

  NodeId source() const { return 0; }
  NodeId u_node(int a) const { return 1 + a; }
  NodeId v_node(int b) const { return 1 + graph.u_count + b; }
  NodeId sink() const { return instance.network().sink(); }
};

// Throws InvalidArgumentError for a non-bipartite edge list, empty sides,
// k < 1 or phases < 1. InvalidInstanceError if the network is disconnected
// (some U or V node has no path through the bipartite edges).
IbmReduction GenerateIbmReduction(const BipartiteGraph& graph, int k,
                                  int phases);

struct PlantedGraph {
  BipartiteGraph graph;
  // (i, i) for i < k.
  std::vector<std::pair<int, int>> matching;
};

// Bipartite graph on k + extra_u and k + extra_v nodes holding the induced
// matching {(i, i) : i < k}. Other edges appear with probability
// `edge_probability` unless they would join two matching edges.
PlantedGraph PlantInducedMatching(int k, int extra_u, int extra_v,
                                  double edge_probability, std::uint64_t seed);

// Per phase h and i < k: round (k+1)h + i carries (source -> u_i) for packet
// (h, i) and (v_{(i+1) mod k} -> sink) for the matching packet of phase
// h - 1; round (k+1)h + k moves every packet of phase h across its matching
// edge. A final phase only delivers. With k = 1 a delivery from v_0 shares
// its round with the next phase's call into u_0 and the two interfere, so
// the result is only a valid schedule for phases == 1 in that case.
// Throws InvalidArgumentError unless
// `matching` is an induced matching of size k in the reduction's graph.
Schedule IbmMatchingSchedule(const IbmReduction& reduction,
                             std::span<const std::pair<int, int>> matching);

////////////////////////////////////////////////////////////////////////////////
// Shortest-path trap
////////////////////////////////////////////////////////////////////////////////

// Node layout of the trap network.
struct TrapLayout {
  static constexpr NodeId kSink = 0;
  static constexpr NodeId kHub = 1;
  // Middle of the two-hop arc hub - relay - sink.
  static constexpr NodeId kRelay = 2;
  static constexpr int kNodeCount = 15;

  // Side path `side` (0..2) is entry(side) = step 0, then steps 1..3, then
  // the sink. Entries are the packet origins and neighbor the hub.
  static constexpr NodeId Step(int side, int step) { return 3 + 4 * side + step; }
  static constexpr NodeId Entry(int side) { return Step(side, 0); }
};

// Three packets per phase i, one at each entry, released at 5i; packet
// 3i + side starts at Entry(side). d_I = 1. Throws InvalidArgumentError for
// phases < 1.
Instance GenerateTrap(int phases);

// Sends every packet down its own side path: phase i advances all three in
// rounds 5i..5i+2 and delivers them one by one in rounds 5i+3..5i+5.
// Throws InvalidArgumentError if `instance` is not a trap instance.
Schedule TrapAdversarySchedule(const Instance& instance);

}  // namespace wgp

#endif  // WGP_GENERATORS_H_
