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

// Data model for the wireless gathering problem: a network with a sink and
// an interference radius, packets released over time at network nodes, and
// round-based schedules of one-hop calls.
//
// Time is discrete. A schedule with speed denominator `sigma` executes round
// index t during real time [t/sigma, (t+1)/sigma). A packet delivered by a
// call in round index t has completion time (t+1)/sigma. All reported times
// are exact rationals.

#ifndef WGP_MODEL_H_
#define WGP_MODEL_H_

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace wgp {

using NodeId = int;
using PacketId = int;
using Round = std::int64_t;
// Exact time values. Compare with == and != only against another Rational:
// Boost 1.74's mixed-type equality recurses forever under C++20 rewriting.
using Rational = boost::rational<std::int64_t>;

inline constexpr NodeId kNoNode = -1;

////////////////////////////////////////////////////////////////////////////////
// Errors
////////////////////////////////////////////////////////////////////////////////

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A network or instance breaks one of its structural invariants.
class InvalidInstanceError : public Error {
 public:
  using Error::Error;
};

// A caller-supplied argument is out of range (bad sigma, oversized oracle
// input, non-bipartite edge list, ...).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Text could not be parsed as an instance or schedule file.
class MalformedInputError : public Error {
 public:
  using Error::Error;
};

// A scheduler ran past its round cap with packets still in the network.
class HorizonExceededError : public Error {
 public:
  using Error::Error;
};

enum class ViolationKind {
  kInvalidSigma,
  kInvalidCall,
  kDuplicatePacket,
  kBeforeRelease,
  kNotHolder,
  kInterference,
  kNotDelivered,
};

std::string_view ViolationKindName(ViolationKind kind);

class ScheduleViolation : public Error {
 public:
  ScheduleViolation(ViolationKind kind, Round round, const std::string& what)
      : Error(what), kind_(kind), round_(round) {}

  ViolationKind kind() const { return kind_; }
  // Round index of the offending call; -1 for whole-schedule violations.
  Round round() const { return round_; }

 private:
  ViolationKind kind_;
  Round round_;
};

////////////////////////////////////////////////////////////////////////////////
// Network
////////////////////////////////////////////////////////////////////////////////

struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Dense all-pairs hop distance table.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int node_count)
      : node_count_(node_count),
        hops_(static_cast<std::size_t>(node_count) * node_count, -1) {}

  int node_count() const { return node_count_; }
  int operator()(NodeId u, NodeId v) const { return hops_[Index(u, v)]; }
  int& at(NodeId u, NodeId v) { return hops_[Index(u, v)]; }

 private:
  std::size_t Index(NodeId u, NodeId v) const {
    return static_cast<std::size_t>(u) * node_count_ + v;
  }

  int node_count_ = 0;
  std::vector<int> hops_;
};

// Hop distances between all node pairs, one breadth-first search per source.
// Throws InvalidInstanceError naming a node that cannot reach node 0.
DistanceMatrix AllPairsDistances(int node_count, std::span<const Edge> edges);

class Network {
 public:
  // Validates the node range, the edge list (no self-loops, no duplicates),
  // connectivity and the radius. Edges keep their given order.
  Network(int node_count, std::vector<Edge> edges, NodeId sink,
          int interference_radius);

  int node_count() const { return node_count_; }
  std::span<const Edge> edges() const { return edges_; }
  NodeId sink() const { return sink_; }
  int interference_radius() const { return interference_radius_; }

  // Ascending node ids.
  std::span<const NodeId> neighbors(NodeId v) const { return adjacency_[v]; }
  bool adjacent(NodeId u, NodeId v) const;

  int distance(NodeId u, NodeId v) const { return distances_(u, v); }
  int distance_to_sink(NodeId v) const { return distances_(v, sink_); }
  const DistanceMatrix& distances() const { return distances_; }
  int diameter() const { return diameter_; }

  // gamma = d_I + 2 and gamma0 = floor((d_I + 1) / 2).
  int gamma() const { return interference_radius_ + 2; }
  int gamma0() const { return (interference_radius_ + 1) / 2; }
  Rational gamma_ratio() const { return Rational(gamma(), gamma0()); }

  bool IsValidNode(NodeId v) const { return v >= 0 && v < node_count_; }

 private:
  int node_count_;
  std::vector<Edge> edges_;
  NodeId sink_;
  int interference_radius_;
  std::vector<std::vector<NodeId>> adjacency_;
  DistanceMatrix distances_;
  int diameter_ = 0;
};

////////////////////////////////////////////////////////////////////////////////
// Instance
////////////////////////////////////////////////////////////////////////////////

struct Packet {
  NodeId origin = 0;
  Round release = 0;

  friend bool operator==(const Packet&, const Packet&) = default;
};

class Instance {
 public:
  Instance(Network network, std::vector<Packet> packets,
           std::string comment = {});

  const Network& network() const { return network_; }
  std::span<const Packet> packets() const { return packets_; }
  const Packet& packet(PacketId j) const { return packets_[j]; }
  int packet_count() const { return static_cast<int>(packets_.size()); }
  // Free-form provenance text carried through files unchanged.
  const std::string& comment() const { return comment_; }

  // delta_j: hops from the origin to the sink.
  int hop_distance(PacketId j) const;
  // pi_j = min(delta_j, gamma0).
  int capped_distance(PacketId j) const;
  // R_j = r_j + delta_j - pi_j.
  Round adjusted_release(PacketId j) const;

  Round max_release() const;

 private:
  Network network_;
  std::vector<Packet> packets_;
  std::string comment_;
};

////////////////////////////////////////////////////////////////////////////////
// Calls and schedules
////////////////////////////////////////////////////////////////////////////////

struct Call {
  PacketId packet = 0;
  NodeId from = 0;
  NodeId to = 0;

  friend auto operator<=>(const Call&, const Call&) = default;
};

std::string ToString(const Call& call);

// Two calls (u,v), (u',v') interfere iff d(u',v) <= radius or
// d(u,v') <= radius. The overload without a radius uses the network's.
bool Compatible(const Call& a, const Call& b, const Network& network,
                int interference_radius);
bool Compatible(const Call& a, const Call& b, const Network& network);

struct Schedule {
  // Round index t covers real time t/sigma.
  int sigma = 1;
  std::vector<std::vector<Call>> rounds;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

// Sorts every round's calls by packet index (the canonical file order).
void Canonicalize(Schedule& schedule);

struct ScheduleMetrics {
  std::vector<Rational> completion;
  std::vector<Rational> flow;
  Rational max_completion{0};
  Rational max_flow{0};
  Round round_count = 0;
};

// Replays `schedule` against `instance` and returns its metrics, or throws
// ScheduleViolation describing the first broken rule. A packet may be sent
// in round index t only if t >= sigma * r_j. Packets released at the sink
// complete at their release date.
ScheduleMetrics ValidateSchedule(const Instance& instance,
                                 const Schedule& schedule);

}  // namespace wgp

#endif  // WGP_MODEL_H_
