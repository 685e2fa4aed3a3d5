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

// Priority Greedy gathering and its FIFO variants.
//
// Every round, released and undelivered packets are considered from highest
// to lowest priority. A packet at node v is sent to its next hop on a fixed
// shortest-path tree if that call is compatible with every call accepted
// earlier in the same round; otherwise it is blocked for the round.

#ifndef WGP_SCHEDULERS_H_
#define WGP_SCHEDULERS_H_

#include <optional>
#include <span>
#include <vector>

#include "wgp/model.h"

namespace wgp {

// Routing tree towards the sink. parent(v) is the lowest-numbered neighbor of
// v one hop closer to the sink; parent(sink) is kNoNode.
class NextHopTree {
 public:
  explicit NextHopTree(std::vector<NodeId> parent) : parent_(std::move(parent)) {}

  NodeId parent(NodeId v) const { return parent_[v]; }
  int node_count() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<NodeId> parent_;
};

NextHopTree ShortestPathTree(const Network& network);

// Strict total order over packets. order()[0] has the highest priority.
class PriorityAssignment {
 public:
  // Throws InvalidArgumentError unless `order` is a permutation of 0..m-1.
  explicit PriorityAssignment(std::vector<PacketId> order);

  std::span<const PacketId> order() const { return order_; }
  // 0 is the highest priority.
  int rank(PacketId j) const { return rank_[j]; }
  bool Precedes(PacketId a, PacketId b) const { return rank_[a] < rank_[b]; }
  int size() const { return static_cast<int>(order_.size()); }

 private:
  std::vector<PacketId> order_;
  std::vector<int> rank_;
};

// By (release date, packet index).
PriorityAssignment FifoPriority(const Instance& instance);
// By (R_j, packet index), R_j = r_j + delta_j - pi_j.
PriorityAssignment AdjustedReleasePriority(const Instance& instance);

// Packet `packet` sat at `node` in round `round` and was not sent.
struct BlockEvent {
  Round round = 0;
  PacketId packet = 0;
  NodeId node = 0;

  friend bool operator==(const BlockEvent&, const BlockEvent&) = default;
};

struct GreedyRun {
  Schedule schedule;
  PriorityAssignment priority;
  // In round order, and by priority within a round.
  std::vector<BlockEvent> blocks;
};

struct GreedyOptions {
  // Round cap; unset means DefaultHorizon(instance, 1).
  std::optional<Round> horizon;
};

// sigma * (max_j r_j + m * (diameter + 1) * gamma).
Round DefaultHorizon(const Instance& instance, int sigma);

// Throws HorizonExceededError if packets remain after the horizon.
GreedyRun PriorityGreedy(const Instance& instance,
                         const PriorityAssignment& priority,
                         const GreedyOptions& options = {});

GreedyRun Fifo(const Instance& instance, const GreedyOptions& options = {});

// Copy of `instance` with every release date multiplied by `sigma`.
Instance ScaleReleases(const Instance& instance, int sigma);

// FIFO on the release-scaled instance, returned as a sigma-speed schedule
// (schedule.sigma == sigma). Block events are in scaled round indices, i.e.
// they describe the FIFO run on ScaleReleases(instance, sigma).
// Throws InvalidArgumentError for sigma < 1.
GreedyRun SigmaFifo(const Instance& instance, int sigma,
                    const GreedyOptions& options = {});

}  // namespace wgp

#endif  // WGP_SCHEDULERS_H_
