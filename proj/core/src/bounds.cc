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

#include "wgp/bounds.h"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

namespace wgp {

BlockingForest::BlockingForest(std::vector<PacketId> parent)
    : parent_(std::move(parent)) {
  const int m = size();
  for (PacketId j = 0; j < m; ++j) {
    if (parent_[j] != kNoPacket && (parent_[j] < 0 || parent_[j] >= m)) {
      throw InvalidArgumentError("blocking parent out of range");
    }
    // Walking more than m steps means a cycle.
    PacketId at = j;
    for (int steps = 0; parent_[at] != kNoPacket; ++steps) {
      if (steps > m) throw InvalidArgumentError("blocking relation has a cycle");
      at = parent_[at];
    }
  }
}

PacketId BlockingForest::Root(PacketId j) const {
  while (parent_[j] != kNoPacket) j = parent_[j];
  return j;
}

std::vector<PacketId> BlockingForest::PathFromRoot(PacketId j) const {
  std::vector<PacketId> path{j};
  while (parent_[j] != kNoPacket) {
    j = parent_[j];
    path.push_back(j);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<PacketId> BlockingForest::Tree(PacketId j) const {
  const PacketId root = Root(j);
  std::vector<PacketId> members;
  for (PacketId i = 0; i < size(); ++i) {
    if (Root(i) == root) members.push_back(i);
  }
  return members;
}

std::vector<std::vector<PacketId>> BlockingForest::Trees() const {
  std::vector<std::vector<PacketId>> trees;
  for (PacketId j = 0; j < size(); ++j) {
    if (IsRoot(j)) trees.push_back(Tree(j));
  }
  return trees;
}

BlockingForest BuildBlockingForest(const Instance& instance,
                                   const GreedyRun& run) {
  const Network& network = instance.network();
  const int m = instance.packet_count();

  // Later events overwrite earlier ones: the last blocked round wins.
  std::vector<const BlockEvent*> last_block(m, nullptr);
  for (const BlockEvent& event : run.blocks) last_block[event.packet] = &event;

  std::vector<PacketId> parent(m, BlockingForest::kNoPacket);
  for (PacketId j = 0; j < m; ++j) {
    const BlockEvent* event = last_block[j];
    if (event == nullptr) continue;
    const auto& calls = run.schedule.rounds.at(event->round);
    int best_distance = std::numeric_limits<int>::max();
    for (const Call& call : calls) {
      if (!run.priority.Precedes(call.packet, j)) continue;
      const int d = network.distance(call.from, event->node);
      // Calls are sorted by packet index, so strict < keeps the lowest index.
      if (d < best_distance) {
        best_distance = d;
        parent[j] = call.packet;
      }
    }
    if (parent[j] == BlockingForest::kNoPacket) {
      throw InvalidArgumentError(
          "packet " + std::to_string(j) + " was blocked in round " +
          std::to_string(event->round) +
          " without any higher-priority packet being sent");
    }
  }
  return BlockingForest(std::move(parent));
}

Rational CompletionUpperBound(const Instance& instance,
                              const BlockingForest& forest, PacketId j) {
  std::int64_t pi_sum = 0;
  for (const PacketId i : forest.PathFromRoot(j)) {
    pi_sum += instance.capped_distance(i);
  }
  return Rational(instance.adjusted_release(forest.Root(j))) +
         instance.network().gamma_ratio() * pi_sum;
}

Rational PackingLowerBound(const Instance& instance,
                           std::span<const PacketId> packets) {
  if (packets.empty()) {
    throw InvalidArgumentError("lower bound needs a nonempty packet set");
  }
  Round min_adjusted = std::numeric_limits<Round>::max();
  Round pi_sum = 0;
  Round routing = 0;
  for (const PacketId j : packets) {
    min_adjusted = std::min(min_adjusted, instance.adjusted_release(j));
    pi_sum += instance.capped_distance(j);
    routing = std::max(routing, instance.packet(j).release +
                                    instance.hop_distance(j));
  }
  return Rational(std::max(min_adjusted + pi_sum, routing));
}

Rational BestTreeLowerBound(const Instance& instance,
                            const BlockingForest& forest) {
  Rational best(0);
  for (const auto& tree : forest.Trees()) {
    best = std::max(best, PackingLowerBound(instance, tree));
  }
  return best;
}

std::vector<UpperBoundRow> UpperBoundTable(const Instance& instance,
                                           const GreedyRun& run) {
  const ScheduleMetrics metrics = ValidateSchedule(instance, run.schedule);
  const BlockingForest forest = BuildBlockingForest(instance, run);
  std::vector<UpperBoundRow> rows;
  for (PacketId j = 0; j < instance.packet_count(); ++j) {
    const Rational bound = CompletionUpperBound(instance, forest, j);
    rows.push_back({j, metrics.completion[j], bound,
                    bound - metrics.completion[j]});
  }
  return rows;
}

}  // namespace wgp
