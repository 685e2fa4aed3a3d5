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

// Reference optimum for tiny instances, written from the model definition
// alone: it computes its own distances and interference test and explores
// every packet movement round by round. Exponential; keep m and n small.

#ifndef WGP_TESTS_SUPPORT_BRUTE_FORCE_H_
#define WGP_TESTS_SUPPORT_BRUTE_FORCE_H_

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "wgp/model.h"

namespace wgp::testing {

class BruteForce {
 public:
  explicit BruteForce(const Instance& instance) : instance_(instance) {
    const Network& net = instance.network();
    n_ = net.node_count();
    dist_.assign(n_, std::vector<int>(n_, kFar));
    for (int v = 0; v < n_; ++v) dist_[v][v] = 0;
    for (const Edge& e : net.edges()) dist_[e.u][e.v] = dist_[e.v][e.u] = 1;
    for (int k = 0; k < n_; ++k) {
      for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
          dist_[i][j] = std::min(dist_[i][j], dist_[i][k] + dist_[k][j]);
        }
      }
    }
  }

  // Smallest B such that every packet can reach the sink by its deadline,
  // deadline B (completion) or r_j + B (flow). nullopt if none up to limit.
  std::optional<int> Optimum(bool flow, int limit = 40) const {
    for (int bound = 0; bound <= limit; ++bound) {
      if (Feasible(flow, bound)) return bound;
    }
    return std::nullopt;
  }

 private:
  static constexpr int kFar = 1 << 20;

  bool Interfere(int u, int v, int u2, int v2) const {
    const int radius = instance_.network().interference_radius();
    return dist_[u2][v] <= radius || dist_[u][v2] <= radius;
  }

  bool Feasible(bool flow, int bound) const {
    const int m = instance_.packet_count();
    const int sink = instance_.network().sink();
    std::vector<long> deadline(m);
    long horizon = 0;
    for (int j = 0; j < m; ++j) {
      const Packet& p = instance_.packet(j);
      deadline[j] = flow ? p.release + bound : bound;
      if (p.origin == sink && p.release > deadline[j]) return false;
      horizon = std::max(horizon, deadline[j]);
    }
    std::vector<int> start(m);
    for (int j = 0; j < m; ++j) start[j] = instance_.packet(j).origin;
    std::set<std::vector<int>> frontier{start};
    for (long t = 0; t <= horizon; ++t) {
      // Packets still out after round t - 1 must have deadline > t.
      std::set<std::vector<int>> alive;
      for (const auto& state : frontier) {
        bool ok = true;
        for (int j = 0; j < m; ++j) {
          if (state[j] != sink && deadline[j] <= t) ok = false;
        }
        if (ok) alive.insert(state);
      }
      for (const auto& state : alive) {
        if (std::all_of(state.begin(), state.end(),
                        [&](int v) { return v == sink; })) {
          return true;
        }
      }
      std::set<std::vector<int>> next;
      for (const auto& state : alive) Expand(state, t, next);
      frontier = std::move(next);
      if (frontier.empty()) return false;
    }
    return false;
  }

  void Expand(const std::vector<int>& state, long t,
              std::set<std::vector<int>>& out) const {
    const int m = instance_.packet_count();
    const Network& net = instance_.network();
    std::vector<int> next = state;
    std::vector<std::pair<int, int>> moves;
    // Depth-first over packets: stay, or move to any neighbor.
    auto recurse = [&](auto&& self, int j) -> void {
      if (j == m) {
        out.insert(next);
        return;
      }
      self(self, j + 1);
      const int at = state[j];
      if (at == net.sink() || instance_.packet(j).release > t) return;
      for (int v = 0; v < n_; ++v) {
        if (dist_[at][v] != 1) continue;
        bool clash = false;
        for (const auto& [u2, v2] : moves) clash = clash || Interfere(at, v, u2, v2);
        if (clash) continue;
        moves.emplace_back(at, v);
        next[j] = v;
        self(self, j + 1);
        next[j] = at;
        moves.pop_back();
      }
    };
    recurse(recurse, 0);
  }

  const Instance& instance_;
  int n_ = 0;
  std::vector<std::vector<int>> dist_;
};

}  // namespace wgp::testing

#endif  // WGP_TESTS_SUPPORT_BRUTE_FORCE_H_
