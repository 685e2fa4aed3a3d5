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

// Completion-time bounds for Priority Greedy schedules.
//
// The blocking forest links every packet j that was ever blocked to the
// packet k that was sent in j's last blocked round, has higher priority than
// j, and whose sender was closest to j's node. For each packet, b(j) is the
// root of its tree and P(j) the root-to-j path.

#ifndef WGP_BOUNDS_H_
#define WGP_BOUNDS_H_

#include <span>
#include <vector>

#include "wgp/model.h"
#include "wgp/schedulers.h"

namespace wgp {

class BlockingForest {
 public:
  // parent[j] is kNoPacket for never-blocked packets.
  static constexpr PacketId kNoPacket = -1;
  explicit BlockingForest(std::vector<PacketId> parent);

  int size() const { return static_cast<int>(parent_.size()); }
  PacketId parent(PacketId j) const { return parent_[j]; }
  bool IsRoot(PacketId j) const { return parent_[j] == kNoPacket; }

  // b(j).
  PacketId Root(PacketId j) const;
  // P(j), from b(j) down to j.
  std::vector<PacketId> PathFromRoot(PacketId j) const;
  // T(j), ascending packet ids.
  std::vector<PacketId> Tree(PacketId j) const;
  // One entry per root, in ascending root order; members ascending.
  std::vector<std::vector<PacketId>> Trees() const;

 private:
  std::vector<PacketId> parent_;
};

// `run` must come from PriorityGreedy on `instance` (for SigmaFifo runs, on
// ScaleReleases(instance, sigma)). Ties between equally close blockers go to
// the lower packet index.
BlockingForest BuildBlockingForest(const Instance& instance,
                                   const GreedyRun& run);

// R_{b(j)} + (gamma/gamma0) * sum over P(j) of pi_i.
Rational CompletionUpperBound(const Instance& instance,
                              const BlockingForest& forest, PacketId j);

// Certified lower bound on the optimal maximum completion time:
//   max(min_{k in S} R_k + sum_{i in S} pi_i, max_{j in S} (r_j + delta_j)).
// Throws InvalidArgumentError for an empty set.
Rational PackingLowerBound(const Instance& instance,
                           std::span<const PacketId> packets);

// Largest PackingLowerBound over the trees of `forest`.
Rational BestTreeLowerBound(const Instance& instance,
                            const BlockingForest& forest);

struct UpperBoundRow {
  PacketId packet = 0;
  Rational completion;
  Rational upper_bound;
  Rational slack;  // upper_bound - completion
};

// One row per packet for a unit-speed greedy run on `instance`.
std::vector<UpperBoundRow> UpperBoundTable(const Instance& instance,
                                           const GreedyRun& run);

}  // namespace wgp

#endif  // WGP_BOUNDS_H_
