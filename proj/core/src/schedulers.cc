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

#include "wgp/schedulers.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>

namespace wgp {

NextHopTree ShortestPathTree(const Network& network) {
  std::vector<NodeId> parent(network.node_count(), kNoNode);
  for (NodeId v = 0; v < network.node_count(); ++v) {
    if (v == network.sink()) continue;
    const int hops = network.distance_to_sink(v);
    // Neighbors are sorted, so the first match is the lowest id.
    for (const NodeId w : network.neighbors(v)) {
      if (network.distance_to_sink(w) == hops - 1) {
        parent[v] = w;
        break;
      }
    }
  }
  return NextHopTree(std::move(parent));
}

PriorityAssignment::PriorityAssignment(std::vector<PacketId> order)
    : order_(std::move(order)), rank_(order_.size(), -1) {
  const int m = static_cast<int>(order_.size());
  for (int r = 0; r < m; ++r) {
    const PacketId j = order_[r];
    if (j < 0 || j >= m || rank_[j] >= 0) {
      throw InvalidArgumentError(
          "priority order is not a permutation of the packet indices");
    }
    rank_[j] = r;
  }
}

namespace {

template <typename Key>
PriorityAssignment SortedBy(int m, Key key) {
  std::vector<PacketId> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](PacketId a, PacketId b) {
    return std::make_pair(key(a), a) < std::make_pair(key(b), b);
  });
  return PriorityAssignment(std::move(order));
}

}  // namespace

PriorityAssignment FifoPriority(const Instance& instance) {
  return SortedBy(instance.packet_count(),
                  [&](PacketId j) { return instance.packet(j).release; });
}

PriorityAssignment AdjustedReleasePriority(const Instance& instance) {
  return SortedBy(instance.packet_count(),
                  [&](PacketId j) { return instance.adjusted_release(j); });
}

Round DefaultHorizon(const Instance& instance, int sigma) {
  const Network& network = instance.network();
  return static_cast<Round>(sigma) *
         (instance.max_release() +
          static_cast<Round>(instance.packet_count()) *
              (network.diameter() + 1) * network.gamma());
}

GreedyRun PriorityGreedy(const Instance& instance,
                         const PriorityAssignment& priority,
                         const GreedyOptions& options) {
  const Network& network = instance.network();
  const int m = instance.packet_count();
  if (priority.size() != m) {
    throw InvalidArgumentError("priority covers " +
                               std::to_string(priority.size()) +
                               " packets, instance has " + std::to_string(m));
  }
  const NextHopTree tree = ShortestPathTree(network);
  const Round horizon = options.horizon.value_or(DefaultHorizon(instance, 1));

  GreedyRun run{Schedule{}, priority, {}};
  std::vector<NodeId> position(m);
  int remaining = 0;
  for (PacketId j = 0; j < m; ++j) {
    position[j] = instance.packet(j).origin;
    if (position[j] != network.sink()) ++remaining;
  }

  std::vector<Call> accepted;
  for (Round t = 0; remaining > 0; ++t) {
    if (t >= horizon) {
      throw HorizonExceededError(
          std::to_string(remaining) + " packet(s) undelivered after " +
          std::to_string(horizon) + " rounds");
    }
    accepted.clear();
    for (const PacketId j : priority.order()) {
      if (instance.packet(j).release > t) continue;
      const NodeId at = position[j];
      if (at == network.sink()) continue;
      const Call call{j, at, tree.parent(at)};
      const bool fits =
          std::all_of(accepted.begin(), accepted.end(), [&](const Call& c) {
            return Compatible(c, call, network);
          });
      if (fits) {
        accepted.push_back(call);
      } else {
        run.blocks.push_back({t, j, at});
      }
    }
    for (const Call& call : accepted) {
      position[call.packet] = call.to;
      if (call.to == network.sink()) --remaining;
    }
    auto& round = run.schedule.rounds.emplace_back(accepted);
    std::sort(round.begin(), round.end());
  }
  return run;
}

GreedyRun Fifo(const Instance& instance, const GreedyOptions& options) {
  return PriorityGreedy(instance, FifoPriority(instance), options);
}

Instance ScaleReleases(const Instance& instance, int sigma) {
  if (sigma < 1) {
    throw InvalidArgumentError("sigma must be at least 1, got " +
                               std::to_string(sigma));
  }
  std::vector<Packet> packets(instance.packets().begin(),
                              instance.packets().end());
  for (Packet& p : packets) p.release *= sigma;
  return Instance(instance.network(), std::move(packets), instance.comment());
}

GreedyRun SigmaFifo(const Instance& instance, int sigma,
                    const GreedyOptions& options) {
  const Instance scaled = ScaleReleases(instance, sigma);
  GreedyOptions scaled_options = options;
  if (!scaled_options.horizon) {
    scaled_options.horizon = DefaultHorizon(instance, sigma);
  }
  GreedyRun run = Fifo(scaled, scaled_options);
  run.schedule.sigma = sigma;
  return run;
}

}  // namespace wgp
