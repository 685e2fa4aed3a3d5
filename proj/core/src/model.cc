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

#include "wgp/model.h"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <utility>

namespace wgp {

std::string_view ViolationKindName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kInvalidSigma:
      return "invalid-sigma";
    case ViolationKind::kInvalidCall:
      return "invalid-call";
    case ViolationKind::kDuplicatePacket:
      return "duplicate-packet";
    case ViolationKind::kBeforeRelease:
      return "before-release";
    case ViolationKind::kNotHolder:
      return "not-holder";
    case ViolationKind::kInterference:
      return "interference";
    case ViolationKind::kNotDelivered:
      return "not-delivered";
  }
  return "unknown";
}

namespace {

std::vector<std::vector<NodeId>> BuildAdjacency(int node_count,
                                                std::span<const Edge> edges) {
  std::vector<std::vector<NodeId>> adjacency(node_count);
  for (const Edge& e : edges) {
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }
  for (auto& list : adjacency) std::sort(list.begin(), list.end());
  return adjacency;
}

void CheckEdges(int node_count, std::span<const Edge> edges) {
  std::set<std::pair<NodeId, NodeId>> seen;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= node_count || e.v < 0 || e.v >= node_count) {
      throw InvalidInstanceError("edge (" + std::to_string(e.u) + "," +
                                 std::to_string(e.v) +
                                 ") references a node outside 0.." +
                                 std::to_string(node_count - 1));
    }
    if (e.u == e.v) {
      throw InvalidInstanceError("self-loop at node " + std::to_string(e.u));
    }
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      throw InvalidInstanceError("duplicate edge (" + std::to_string(e.u) +
                                 "," + std::to_string(e.v) + ")");
    }
  }
}

}  // namespace

DistanceMatrix AllPairsDistances(int node_count, std::span<const Edge> edges) {
  const auto adjacency = BuildAdjacency(node_count, edges);
  DistanceMatrix dist(node_count);
  std::deque<NodeId> queue;
  for (NodeId source = 0; source < node_count; ++source) {
    dist.at(source, source) = 0;
    queue.assign(1, source);
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop_front();
      for (const NodeId v : adjacency[u]) {
        if (dist(source, v) < 0) {
          dist.at(source, v) = dist(source, u) + 1;
          queue.push_back(v);
        }
      }
    }
    for (NodeId v = 0; v < node_count; ++v) {
      if (dist(source, v) < 0) {
        throw InvalidInstanceError("network is disconnected: node " +
                                   std::to_string(v) +
                                   " is unreachable from node " +
                                   std::to_string(source));
      }
    }
  }
  return dist;
}

Network::Network(int node_count, std::vector<Edge> edges, NodeId sink,
                 int interference_radius)
    : node_count_(node_count),
      edges_(std::move(edges)),
      sink_(sink),
      interference_radius_(interference_radius) {
  if (node_count_ < 1) {
    throw InvalidInstanceError("node count must be positive");
  }
  if (!IsValidNode(sink_)) {
    throw InvalidInstanceError("sink " + std::to_string(sink_) +
                               " is not a node id");
  }
  if (interference_radius_ < 1) {
    throw InvalidInstanceError("interference radius must be at least 1");
  }
  CheckEdges(node_count_, edges_);
  adjacency_ = BuildAdjacency(node_count_, edges_);
  distances_ = AllPairsDistances(node_count_, edges_);
  for (NodeId u = 0; u < node_count_; ++u) {
    for (NodeId v = 0; v < node_count_; ++v) {
      diameter_ = std::max(diameter_, distances_(u, v));
    }
  }
}

bool Network::adjacent(NodeId u, NodeId v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

Instance::Instance(Network network, std::vector<Packet> packets,
                   std::string comment)
    : network_(std::move(network)),
      packets_(std::move(packets)),
      comment_(std::move(comment)) {
  for (std::size_t j = 0; j < packets_.size(); ++j) {
    if (!network_.IsValidNode(packets_[j].origin)) {
      throw InvalidInstanceError("packet " + std::to_string(j) +
                                 " has origin " +
                                 std::to_string(packets_[j].origin) +
                                 " outside the network");
    }
    if (packets_[j].release < 0) {
      throw InvalidInstanceError("packet " + std::to_string(j) +
                                 " has a negative release date");
    }
  }
}

int Instance::hop_distance(PacketId j) const {
  return network_.distance_to_sink(packets_[j].origin);
}

int Instance::capped_distance(PacketId j) const {
  return std::min(hop_distance(j), network_.gamma0());
}

Round Instance::adjusted_release(PacketId j) const {
  return packets_[j].release + hop_distance(j) - capped_distance(j);
}

Round Instance::max_release() const {
  Round latest = 0;
  for (const Packet& p : packets_) latest = std::max(latest, p.release);
  return latest;
}

std::string ToString(const Call& call) {
  std::ostringstream out;
  out << "packet " << call.packet << " " << call.from << "->" << call.to;
  return out.str();
}

bool Compatible(const Call& a, const Call& b, const Network& network,
                int interference_radius) {
  return network.distance(b.from, a.to) > interference_radius &&
         network.distance(a.from, b.to) > interference_radius;
}

bool Compatible(const Call& a, const Call& b, const Network& network) {
  return Compatible(a, b, network, network.interference_radius());
}

void Canonicalize(Schedule& schedule) {
  for (auto& round : schedule.rounds) {
    std::sort(round.begin(), round.end());
  }
}

ScheduleMetrics ValidateSchedule(const Instance& instance,
                                 const Schedule& schedule) {
  if (schedule.sigma < 1) {
    throw ScheduleViolation(ViolationKind::kInvalidSigma, -1,
                            "sigma must be at least 1, got " +
                                std::to_string(schedule.sigma));
  }
  const Network& network = instance.network();
  const int m = instance.packet_count();
  const Round sigma = schedule.sigma;

  std::vector<NodeId> position(m);
  std::vector<Round> completion_round(m, -1);
  for (PacketId j = 0; j < m; ++j) {
    position[j] = instance.packet(j).origin;
    if (position[j] == network.sink()) {
      completion_round[j] = sigma * instance.packet(j).release;
    }
  }

  std::vector<Round> last_called(m, -1);
  for (Round t = 0; t < static_cast<Round>(schedule.rounds.size()); ++t) {
    const auto& calls = schedule.rounds[t];
    const std::string where = "round " + std::to_string(t) + ": ";
    for (const Call& call : calls) {
      if (call.packet < 0 || call.packet >= m) {
        throw ScheduleViolation(ViolationKind::kInvalidCall, t,
                                where + "unknown packet " +
                                    std::to_string(call.packet));
      }
      if (!network.IsValidNode(call.from) || !network.IsValidNode(call.to) ||
          !network.adjacent(call.from, call.to)) {
        throw ScheduleViolation(ViolationKind::kInvalidCall, t,
                                where + ToString(call) +
                                    " is not along a network edge");
      }
      if (last_called[call.packet] == t) {
        throw ScheduleViolation(ViolationKind::kDuplicatePacket, t,
                                where + "packet " +
                                    std::to_string(call.packet) +
                                    " is called more than once");
      }
      last_called[call.packet] = t;
      if (t < sigma * instance.packet(call.packet).release) {
        throw ScheduleViolation(ViolationKind::kBeforeRelease, t,
                                where + ToString(call) +
                                    " is sent before its release");
      }
      if (position[call.packet] != call.from ||
          completion_round[call.packet] >= 0) {
        throw ScheduleViolation(
            ViolationKind::kNotHolder, t,
            where + ToString(call) + ": sender does not hold the packet");
      }
    }
    for (std::size_t a = 0; a < calls.size(); ++a) {
      for (std::size_t b = a + 1; b < calls.size(); ++b) {
        if (!Compatible(calls[a], calls[b], network)) {
          throw ScheduleViolation(ViolationKind::kInterference, t,
                                  where + ToString(calls[a]) +
                                      " interferes with " +
                                      ToString(calls[b]));
        }
      }
    }
    for (const Call& call : calls) {
      position[call.packet] = call.to;
      if (call.to == network.sink()) completion_round[call.packet] = t + 1;
    }
  }

  ScheduleMetrics metrics;
  metrics.round_count = static_cast<Round>(schedule.rounds.size());
  metrics.completion.reserve(m);
  metrics.flow.reserve(m);
  for (PacketId j = 0; j < m; ++j) {
    if (completion_round[j] < 0) {
      throw ScheduleViolation(ViolationKind::kNotDelivered, -1,
                              "packet " + std::to_string(j) +
                                  " never reaches the sink (left at node " +
                                  std::to_string(position[j]) + ")");
    }
    const Rational completion(completion_round[j], sigma);
    const Rational flow = completion - instance.packet(j).release;
    metrics.completion.push_back(completion);
    metrics.flow.push_back(flow);
    metrics.max_completion = std::max(metrics.max_completion, completion);
    metrics.max_flow = std::max(metrics.max_flow, flow);
  }
  return metrics;
}

}  // namespace wgp
