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

#include "wgp/generators.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace wgp {

Topology ParseTopology(std::string_view name) {
  if (name == "line") return Topology::kLine;
  if (name == "star") return Topology::kStar;
  if (name == "grid") return Topology::kGrid;
  if (name == "random") return Topology::kRandom;
  throw InvalidArgumentError("unknown topology \"" + std::string(name) + "\"");
}

std::string_view TopologyName(Topology topology) {
  switch (topology) {
    case Topology::kLine:
      return "line";
    case Topology::kStar:
      return "star";
    case Topology::kGrid:
      return "grid";
    case Topology::kRandom:
      return "random";
  }
  return "?";
}

OriginPolicy ParseOriginPolicy(std::string_view name) {
  if (name == "fixed") return OriginPolicy::kFixed;
  if (name == "uniform") return OriginPolicy::kUniform;
  if (name == "each") return OriginPolicy::kEachNode;
  throw InvalidArgumentError("unknown origin policy \"" + std::string(name) +
                             "\"");
}

ReleasePolicy ParseReleasePolicy(std::string_view name) {
  if (name == "zero") return ReleasePolicy::kZero;
  if (name == "spaced") return ReleasePolicy::kSpaced;
  throw InvalidArgumentError("unknown release policy \"" + std::string(name) +
                             "\"");
}

namespace {

constexpr int kMaxConnectAttempts = 10000;

bool IsConnected(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<NodeId>> adjacency(n);
  for (const Edge& e : edges) {
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }
  std::vector<bool> seen(n, false);
  std::vector<NodeId> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    for (const NodeId v : adjacency[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

std::vector<Edge> TopologyEdges(const StandardParams& params,
                                std::mt19937_64& rng, int& node_count) {
  std::vector<Edge> edges;
  switch (params.topology) {
    case Topology::kLine:
      node_count = params.nodes;
      for (NodeId v = 1; v < node_count; ++v) edges.push_back({v - 1, v});
      break;
    case Topology::kStar:
      node_count = params.nodes;
      for (NodeId v = 1; v < node_count; ++v) edges.push_back({0, v});
      break;
    case Topology::kGrid:
      if (params.rows < 1 || params.cols < 1) {
        throw InvalidArgumentError("grid needs rows >= 1 and cols >= 1");
      }
      node_count = params.rows * params.cols;
      for (int r = 0; r < params.rows; ++r) {
        for (int c = 0; c < params.cols; ++c) {
          const NodeId v = r * params.cols + c;
          if (c + 1 < params.cols) edges.push_back({v, v + 1});
          if (r + 1 < params.rows) edges.push_back({v, v + params.cols});
        }
      }
      break;
    case Topology::kRandom: {
      if (!(params.edge_probability > 0.0 && params.edge_probability <= 1.0)) {
        throw InvalidArgumentError("edge probability must lie in (0, 1]");
      }
      node_count = params.nodes;
      std::bernoulli_distribution coin(params.edge_probability);
      for (int attempt = 0; attempt < kMaxConnectAttempts; ++attempt) {
        edges.clear();
        for (NodeId u = 0; u < node_count; ++u) {
          for (NodeId v = u + 1; v < node_count; ++v) {
            if (coin(rng)) edges.push_back({u, v});
          }
        }
        if (IsConnected(node_count, edges)) return edges;
      }
      throw InvalidArgumentError("no connected random graph after " +
                                 std::to_string(kMaxConnectAttempts) +
                                 " draws; raise the edge probability");
    }
  }
  return edges;
}

}  // namespace

Instance GenerateStandard(const StandardParams& params, std::uint64_t seed) {
  if (params.nodes < 1) throw InvalidArgumentError("nodes must be at least 1");
  if (params.packets < 0) throw InvalidArgumentError("packets must be >= 0");
  if (params.interference_radius < 1) {
    throw InvalidArgumentError("d_I must be at least 1");
  }
  if (params.release == ReleasePolicy::kSpaced && !(params.mean_gap >= 0.0)) {
    throw InvalidArgumentError("mean release gap must be nonnegative");
  }
  std::mt19937_64 rng(seed);
  int node_count = 0;
  std::vector<Edge> edges = TopologyEdges(params, rng, node_count);
  const NodeId sink = 0;

  std::vector<NodeId> origins;
  switch (params.origin) {
    case OriginPolicy::kFixed: {
      const NodeId at =
          params.origin_node == kNoNode ? node_count - 1 : params.origin_node;
      if (at < 0 || at >= node_count) {
        throw InvalidArgumentError("origin node " + std::to_string(at) +
                                   " is not in the network");
      }
      origins.assign(params.packets, at);
      break;
    }
    case OriginPolicy::kUniform: {
      if (node_count == 1) {
        origins.assign(params.packets, sink);
        break;
      }
      std::uniform_int_distribution<NodeId> pick(1, node_count - 1);
      for (int j = 0; j < params.packets; ++j) origins.push_back(pick(rng));
      break;
    }
    case OriginPolicy::kEachNode:
      for (NodeId v = 1; v < node_count; ++v) origins.push_back(v);
      break;
  }

  std::vector<Packet> packets;
  Round release = 0;
  std::geometric_distribution<int> gap(1.0 / (1.0 + params.mean_gap));
  for (const NodeId origin : origins) {
    if (params.release == ReleasePolicy::kSpaced && !packets.empty()) {
      release += gap(rng);
    }
    packets.push_back({origin, release});
  }

  std::ostringstream comment;
  comment << "generator=" << TopologyName(params.topology);
  switch (params.topology) {
    case Topology::kGrid:
      comment << " rows=" << params.rows << " cols=" << params.cols;
      break;
    case Topology::kRandom:
      comment << " nodes=" << params.nodes << " p=" << params.edge_probability;
      break;
    default:
      comment << " nodes=" << params.nodes;
  }
  comment << " packets=" << packets.size() << " d_I="
          << params.interference_radius << " seed=" << seed;

  Network network(node_count, std::move(edges), sink,
                  params.interference_radius);
  return Instance(std::move(network), std::move(packets), comment.str());
}

////////////////////////////////////////////////////////////////////////////////
// Four-layer induced-matching network
////////////////////////////////////////////////////////////////////////////////

IbmReduction GenerateIbmReduction(const BipartiteGraph& graph, int k,
                                  int phases) {
  CheckBipartite(graph);
  if (graph.u_count < 1 || graph.v_count < 1) {
    throw InvalidArgumentError("both bipartite sides need at least one node");
  }
  if (k < 1) throw InvalidArgumentError("k must be at least 1");
  if (phases < 1) throw InvalidArgumentError("phases must be at least 1");

  IbmReduction layout{Instance(Network(1, {}, 0, 1), {}), graph, k, phases};
  const int u = graph.u_count;
  const int v = graph.v_count;
  const int node_count = u + v + 2;
  const NodeId sink = node_count - 1;

  std::vector<Edge> edges;
  for (int a = 0; a < u; ++a) edges.push_back({layout.source(), layout.u_node(a)});
  for (int a = 0; a < u; ++a) {
    for (int b = a + 1; b < u; ++b) {
      edges.push_back({layout.u_node(a), layout.u_node(b)});
    }
  }
  for (const auto& [a, b] : graph.edges) {
    edges.push_back({layout.u_node(a), layout.v_node(b)});
  }
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) {
      edges.push_back({layout.v_node(a), layout.v_node(b)});
    }
  }
  for (int b = 0; b < v; ++b) edges.push_back({layout.v_node(b), sink});

  std::vector<Packet> packets;
  for (int h = 0; h < phases; ++h) {
    for (int i = 0; i < k; ++i) {
      packets.push_back({layout.source(), static_cast<Round>(k + 1) * h});
    }
  }
  std::ostringstream comment;
  comment << "generator=ibm u=" << u << " v=" << v
          << " bipartite_edges=" << graph.edges.size() << " k=" << k
          << " phases=" << phases;
  layout.instance = Instance(Network(node_count, std::move(edges), sink, 1),
                             std::move(packets), comment.str());
  return layout;
}

PlantedGraph PlantInducedMatching(int k, int extra_u, int extra_v,
                                  double edge_probability, std::uint64_t seed) {
  if (k < 1 || extra_u < 0 || extra_v < 0) {
    throw InvalidArgumentError("need k >= 1 and nonnegative extra sizes");
  }
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw InvalidArgumentError("edge probability must lie in [0, 1]");
  }
  PlantedGraph planted;
  planted.graph.u_count = k + extra_u;
  planted.graph.v_count = k + extra_v;
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(edge_probability);
  for (int a = 0; a < planted.graph.u_count; ++a) {
    for (int b = 0; b < planted.graph.v_count; ++b) {
      if (a < k && b < k) {
        if (a == b) planted.graph.edges.push_back({a, b});
        continue;
      }
      if (coin(rng)) planted.graph.edges.push_back({a, b});
    }
  }
  for (int i = 0; i < k; ++i) planted.matching.push_back({i, i});
  return planted;
}

Schedule IbmMatchingSchedule(const IbmReduction& reduction,
                             std::span<const std::pair<int, int>> matching) {
  const int k = reduction.k;
  if (static_cast<int>(matching.size()) != k) {
    throw InvalidArgumentError("matching has " +
                               std::to_string(matching.size()) +
                               " edges, expected k = " + std::to_string(k));
  }
  if (!IsInducedMatching(reduction.graph, matching)) {
    throw InvalidArgumentError("matching is not an induced matching of the graph");
  }
  const Round phase_length = k + 1;
  std::map<Round, std::vector<Call>> rounds;
  for (int h = 0; h < reduction.phases; ++h) {
    const Round start = phase_length * h;
    for (int i = 0; i < k; ++i) {
      const PacketId j = h * k + i;
      const NodeId u = reduction.u_node(matching[i].first);
      const NodeId v = reduction.v_node(matching[i].second);
      rounds[start + i].push_back({j, reduction.source(), u});
      rounds[start + k].push_back({j, u, v});
      // Delivered in the slot where v_i is named as v_{(slot + 1) mod k}.
      const Round slot = (i + k - 1) % k;
      rounds[start + phase_length + slot].push_back({j, v, reduction.sink()});
    }
  }
  Schedule schedule;
  const Round last = rounds.empty() ? -1 : rounds.rbegin()->first;
  schedule.rounds.resize(static_cast<std::size_t>(last + 1));
  for (auto& [t, calls] : rounds) {
    std::sort(calls.begin(), calls.end());
    schedule.rounds[t] = std::move(calls);
  }
  return schedule;
}

////////////////////////////////////////////////////////////////////////////////
// Shortest-path trap
////////////////////////////////////////////////////////////////////////////////

Instance GenerateTrap(int phases) {
  if (phases < 1) throw InvalidArgumentError("phases must be at least 1");
  using L = TrapLayout;
  std::vector<Edge> edges;
  for (int side = 0; side < 3; ++side) {
    edges.push_back({L::kHub, L::Entry(side)});
    for (int step = 0; step < 3; ++step) {
      edges.push_back({L::Step(side, step), L::Step(side, step + 1)});
    }
    edges.push_back({L::Step(side, 3), L::kSink});
  }
  edges.push_back({L::kHub, L::kRelay});
  edges.push_back({L::kRelay, L::kSink});

  std::vector<Packet> packets;
  for (int i = 0; i < phases; ++i) {
    for (int side = 0; side < 3; ++side) {
      packets.push_back({L::Entry(side), static_cast<Round>(5) * i});
    }
  }
  return Instance(Network(L::kNodeCount, std::move(edges), L::kSink, 1),
                  std::move(packets),
                  "generator=trap phases=" + std::to_string(phases));
}

Schedule TrapAdversarySchedule(const Instance& instance) {
  using L = TrapLayout;
  const Network& network = instance.network();
  const int m = instance.packet_count();
  bool shaped = network.node_count() == L::kNodeCount &&
                network.sink() == L::kSink && m > 0 && m % 3 == 0 &&
                network.interference_radius() == 1;
  for (int side = 0; shaped && side < 3; ++side) {
    for (int step = 0; step < 3; ++step) {
      shaped = shaped && network.adjacent(L::Step(side, step), L::Step(side, step + 1));
    }
    shaped = shaped && network.adjacent(L::Step(side, 3), L::kSink);
  }
  for (PacketId j = 0; shaped && j < m; ++j) {
    shaped = instance.packet(j).origin == L::Entry(j % 3) &&
             instance.packet(j).release == static_cast<Round>(5) * (j / 3);
  }
  if (!shaped) {
    throw InvalidArgumentError("instance does not have the trap layout");
  }

  std::map<Round, std::vector<Call>> rounds;
  for (PacketId j = 0; j < m; ++j) {
    const int side = j % 3;
    const Round start = static_cast<Round>(5) * (j / 3);
    for (int step = 0; step < 3; ++step) {
      rounds[start + step].push_back(
          {j, L::Step(side, step), L::Step(side, step + 1)});
    }
    rounds[start + 3 + side].push_back({j, L::Step(side, 3), L::kSink});
  }
  Schedule schedule;
  schedule.rounds.resize(static_cast<std::size_t>(rounds.rbegin()->first + 1));
  for (auto& [t, calls] : rounds) {
    std::sort(calls.begin(), calls.end());
    schedule.rounds[t] = std::move(calls);
  }
  return schedule;
}

}  // namespace wgp
