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

#include "wgp/oracle.h"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include <boost/dynamic_bitset.hpp>

#include "wgp/bounds.h"
#include "wgp/schedulers.h"

namespace wgp {

std::string_view ObjectiveName(Objective objective) {
  return objective == Objective::kMaxCompletion ? "completion" : "flow";
}

Rational ObjectiveValue(const ScheduleMetrics& metrics, Objective objective) {
  return objective == Objective::kMaxCompletion ? metrics.max_completion
                                                : metrics.max_flow;
}

////////////////////////////////////////////////////////////////////////////////
// Call-set enumeration
////////////////////////////////////////////////////////////////////////////////

namespace {

using Mask = std::uint64_t;

Mask Bit(int i) { return Mask{1} << i; }

// compat[i] has bit k set iff candidates i and k are compatible.
std::vector<Mask> CompatibilityMasks(std::span<const Call> candidates,
                                     const Network& network) {
  if (candidates.size() > 64) {
    throw InvalidArgumentError("at most 64 candidate calls are supported, got " +
                               std::to_string(candidates.size()));
  }
  const int n = static_cast<int>(candidates.size());
  std::vector<Mask> compat(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (Compatible(candidates[a], candidates[b], network)) {
        compat[a] |= Bit(b);
        compat[b] |= Bit(a);
      }
    }
  }
  return compat;
}

std::vector<Call> Expand(std::span<const Call> candidates, Mask set) {
  std::vector<Call> calls;
  for (; set != 0; set &= set - 1) {
    calls.push_back(candidates[std::countr_zero(set)]);
  }
  std::sort(calls.begin(), calls.end());
  return calls;
}

// Bron-Kerbosch with pivoting on the compatibility graph.
void MaximalCliques(const std::vector<Mask>& compat, Mask chosen, Mask pool,
                    Mask excluded, std::vector<Mask>& out) {
  if (pool == 0 && excluded == 0) {
    out.push_back(chosen);
    return;
  }
  int pivot = -1;
  int pivot_degree = -1;
  for (Mask rest = pool | excluded; rest != 0; rest &= rest - 1) {
    const int u = std::countr_zero(rest);
    const int degree = std::popcount(pool & compat[u]);
    if (degree > pivot_degree) {
      pivot = u;
      pivot_degree = degree;
    }
  }
  for (Mask branch = pool & ~compat[pivot]; branch != 0; branch &= branch - 1) {
    const int v = std::countr_zero(branch);
    MaximalCliques(compat, chosen | Bit(v), pool & compat[v],
                   excluded & compat[v], out);
    pool &= ~Bit(v);
    excluded |= Bit(v);
  }
}

void AllCliques(const std::vector<Mask>& compat, Mask chosen, Mask allowed,
                std::vector<Mask>& out) {
  out.push_back(chosen);
  for (Mask rest = allowed; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    // Only higher indices, so every set is produced once.
    const Mask higher = ~(Bit(v + 1) - 1);
    AllCliques(compat, chosen | Bit(v), allowed & compat[v] & higher, out);
  }
}

std::vector<std::vector<Call>> SortedSets(std::span<const Call> candidates,
                                          const std::vector<Mask>& masks) {
  std::vector<std::vector<Call>> sets;
  sets.reserve(masks.size());
  for (const Mask m : masks) sets.push_back(Expand(candidates, m));
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

Mask AllOf(std::size_t n) { return n == 64 ? ~Mask{0} : Bit(static_cast<int>(n)) - 1; }

}  // namespace

std::vector<Call> CandidateCalls(const SearchState& state,
                                 const Instance& instance) {
  const Network& network = instance.network();
  std::vector<Call> calls;
  for (PacketId j = 0; j < instance.packet_count(); ++j) {
    const NodeId at = state.positions.at(j);
    if (at == network.sink() || instance.packet(j).release > state.round) {
      continue;
    }
    for (const NodeId v : network.neighbors(at)) calls.push_back({j, at, v});
  }
  return calls;
}

std::vector<std::vector<Call>> MaximalCompatibleSets(
    std::span<const Call> candidates, const Network& network) {
  const auto compat = CompatibilityMasks(candidates, network);
  std::vector<Mask> masks;
  MaximalCliques(compat, 0, AllOf(candidates.size()), 0, masks);
  return SortedSets(candidates, masks);
}

std::vector<std::vector<Call>> CompatibleSets(std::span<const Call> candidates,
                                              const Network& network) {
  const auto compat = CompatibilityMasks(candidates, network);
  std::vector<Mask> masks;
  AllCliques(compat, 0, AllOf(candidates.size()), masks);
  return SortedSets(candidates, masks);
}

std::vector<std::vector<Call>> EnumerateCallSets(const SearchState& state,
                                                 const Instance& instance) {
  const std::vector<Call> candidates = CandidateCalls(state, instance);
  auto sets = MaximalCompatibleSets(candidates, instance.network());
  sets.emplace_back();
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

std::int64_t NodeBudgetFromEnvironment(std::int64_t fallback) {
  const char* value = std::getenv("WGP_NODE_BUDGET");
  if (value == nullptr) return fallback;
  char* end = nullptr;
  const long long parsed = std::strtoll(value, &end, 10);
  if (end == value || *end != '\0' || parsed <= 0) return fallback;
  return parsed;
}

////////////////////////////////////////////////////////////////////////////////
// Exact search
////////////////////////////////////////////////////////////////////////////////

namespace {

struct BudgetExhausted {};

class DeadlineSearch {
 public:
  DeadlineSearch(const Instance& instance, const OracleOptions& options,
                 std::int64_t& nodes)
      : instance_(instance),
        network_(instance.network()),
        options_(options),
        nodes_(nodes),
        m_(instance.packet_count()),
        bits_per_node_(std::max(
            1, static_cast<int>(std::bit_width(
                   static_cast<unsigned>(network_.node_count() - 1))))) {
    if (m_ * bits_per_node_ > 64) {
      throw InvalidArgumentError("state key does not fit: " +
                                 std::to_string(m_) + " packets on " +
                                 std::to_string(network_.node_count()) +
                                 " nodes");
    }
    // Packets with equal release dates are interchangeable once deadlines
    // depend only on the release date, so their positions are keyed as a
    // multiset.
    std::map<Round, std::vector<PacketId>> by_release;
    for (PacketId j = 0; j < m_; ++j) {
      by_release[instance.packet(j).release].push_back(j);
    }
    class_of_.assign(m_, 0);
    for (const auto& [release, members] : by_release) {
      for (const PacketId j : members) {
        class_of_[j] = static_cast<int>(classes_.size());
      }
      classes_.push_back(members);
    }
  }

  // Searches for a schedule finishing packet j by deadline[j] (a completion
  // round). Fills `rounds` on success.
  bool Run(std::vector<Round> deadline,
           std::vector<std::vector<Call>>& rounds) {
    deadline_ = std::move(deadline);
    failed_at_.clear();
    path_.clear();
    position_.resize(m_);
    for (PacketId j = 0; j < m_; ++j) position_[j] = instance_.packet(j).origin;
    if (!Search(0)) return false;
    rounds = path_;
    return true;
  }

 private:
  struct Mover {
    PacketId packet;
    // Target nodes in branching order; kNoNode means "stay".
    std::vector<NodeId> options;
  };

  int Hops(NodeId v) const { return network_.distance_to_sink(v); }

  std::uint64_t Key() const {
    std::uint64_t key = 0;
    std::vector<NodeId> scratch;
    for (const auto& members : classes_) {
      scratch.clear();
      for (const PacketId j : members) scratch.push_back(position_[j]);
      std::sort(scratch.begin(), scratch.end());
      for (const NodeId v : scratch) {
        key = (key << bits_per_node_) | static_cast<std::uint64_t>(v);
      }
    }
    return key;
  }

  // Residual packing bound on every subset of the undelivered packets.
  bool PackingBoundHolds(Round t, const std::vector<PacketId>& open) const {
    const int n = static_cast<int>(open.size());
    const int gamma0 = network_.gamma0();
    for (unsigned subset = 1; subset < (1u << n); ++subset) {
      Round min_adjusted = std::numeric_limits<Round>::max();
      Round pi_sum = 0;
      Round latest_deadline = 0;
      for (int i = 0; i < n; ++i) {
        if (!(subset & (1u << i))) continue;
        const PacketId j = open[i];
        const Round release = std::max<Round>(instance_.packet(j).release - t, 0);
        const int hops = Hops(position_[j]);
        const int pi = std::min(hops, gamma0);
        min_adjusted = std::min(min_adjusted, release + hops - pi);
        pi_sum += pi;
        latest_deadline = std::max(latest_deadline, deadline_[j]);
      }
      if (t + min_adjusted + pi_sum > latest_deadline) return false;
    }
    return true;
  }

  bool Search(Round t) {
    if (++nodes_ > options_.node_budget) throw BudgetExhausted{};

    std::vector<PacketId> open;
    for (PacketId j = 0; j < m_; ++j) {
      if (position_[j] == network_.sink()) continue;
      const Round start = std::max(t, instance_.packet(j).release);
      if (start + Hops(position_[j]) > deadline_[j]) return false;
      open.push_back(j);
    }
    if (open.empty()) return true;
    if (options_.use_packing_bound && !PackingBoundHolds(t, open)) return false;

    const std::uint64_t key = Key();
    if (const auto it = failed_at_.find(key);
        it != failed_at_.end() && it->second <= t) {
      return false;
    }

    std::vector<Mover> movers;
    for (const PacketId j : open) {
      if (instance_.packet(j).release > t) continue;
      const NodeId at = position_[j];
      Mover mover{j, {}};
      // Closer neighbors first, then waiting, then sideways/backward moves.
      std::vector<NodeId> targets(network_.neighbors(at).begin(),
                                  network_.neighbors(at).end());
      std::stable_sort(targets.begin(), targets.end(),
                       [&](NodeId a, NodeId b) { return Hops(a) < Hops(b); });
      bool stay_added = false;
      for (const NodeId v : targets) {
        if (!stay_added && Hops(v) >= Hops(at)) {
          if (t + 1 + Hops(at) <= deadline_[j]) mover.options.push_back(kNoNode);
          stay_added = true;
        }
        if (t + 1 + Hops(v) <= deadline_[j]) mover.options.push_back(v);
      }
      if (!stay_added && t + 1 + Hops(at) <= deadline_[j]) {
        mover.options.push_back(kNoNode);
      }
      if (mover.options.empty()) {
        Fail(key, t);
        return false;
      }
      movers.push_back(std::move(mover));
    }

    std::vector<Call> chosen;
    std::vector<int> picked(movers.size(), 0);
    if (Branch(t, movers, 0, picked, chosen)) return true;
    Fail(key, t);
    return false;
  }

  bool Branch(Round t, const std::vector<Mover>& movers, std::size_t index,
              std::vector<int>& picked, std::vector<Call>& chosen) {
    if (index == movers.size()) {
      for (const Call& c : chosen) position_[c.packet] = c.to;
      path_.push_back(chosen);
      std::sort(path_.back().begin(), path_.back().end());
      if (Search(t + 1)) return true;
      path_.pop_back();
      for (const Call& c : chosen) position_[c.packet] = c.from;
      return false;
    }
    const Mover& mover = movers[index];
    // Twin packets (same class, same node) have identical option lists;
    // keep only non-decreasing option indices among them.
    int first = 0;
    if (index > 0) {
      const PacketId prev = movers[index - 1].packet;
      if (class_of_[prev] == class_of_[mover.packet] &&
          position_[prev] == position_[mover.packet]) {
        first = picked[index - 1];
      }
    }
    const NodeId at = position_[mover.packet];
    for (int k = first; k < static_cast<int>(mover.options.size()); ++k) {
      picked[index] = k;
      const NodeId target = mover.options[k];
      if (target == kNoNode) {
        if (Branch(t, movers, index + 1, picked, chosen)) return true;
        continue;
      }
      const Call call{mover.packet, at, target};
      const bool fits =
          std::all_of(chosen.begin(), chosen.end(), [&](const Call& c) {
            return Compatible(c, call, network_);
          });
      if (!fits) continue;
      chosen.push_back(call);
      if (Branch(t, movers, index + 1, picked, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  void Fail(std::uint64_t key, Round t) {
    auto [it, inserted] = failed_at_.emplace(key, t);
    if (!inserted) it->second = std::min(it->second, t);
  }

  const Instance& instance_;
  const Network& network_;
  const OracleOptions& options_;
  std::int64_t& nodes_;
  const int m_;
  const int bits_per_node_;
  std::vector<std::vector<PacketId>> classes_;
  std::vector<int> class_of_;

  std::vector<Round> deadline_;
  std::vector<NodeId> position_;
  std::vector<std::vector<Call>> path_;
  std::unordered_map<std::uint64_t, Round> failed_at_;
};

// max over subsets S of the packing bound, shifted for the flow objective.
Round StartingBound(const Instance& instance, Objective objective,
                    bool use_packing_bound) {
  const int m = instance.packet_count();
  Round bound = 0;
  for (PacketId j = 0; j < m; ++j) {
    const Round routing = instance.hop_distance(j) +
                          (objective == Objective::kMaxCompletion
                               ? instance.packet(j).release
                               : 0);
    bound = std::max(bound, routing);
  }
  if (!use_packing_bound || m > 20) return bound;
  std::vector<PacketId> subset;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    subset.clear();
    Round latest_release = 0;
    for (PacketId j = 0; j < m; ++j) {
      if (mask & (1u << j)) {
        subset.push_back(j);
        latest_release = std::max(latest_release, instance.packet(j).release);
      }
    }
    const Rational lb = PackingLowerBound(instance, subset);
    const Round value = lb.numerator() - (objective == Objective::kMaxFlow
                                              ? latest_release
                                              : 0);
    bound = std::max(bound, value);
  }
  return bound;
}

}  // namespace

OracleResult SolveExact(const Instance& instance, Objective objective,
                        const OracleOptions& options) {
  const int m = instance.packet_count();
  if (m > options.max_packets || instance.network().node_count() > options.max_nodes) {
    throw InvalidArgumentError(
        "instance too large for the exact oracle: " + std::to_string(m) +
        " packets, " + std::to_string(instance.network().node_count()) +
        " nodes (limits " + std::to_string(options.max_packets) + " and " +
        std::to_string(options.max_nodes) + ")");
  }

  OracleResult result;
  // FIFO gives a feasible unit-speed schedule and thus an upper bound.
  const Schedule fifo = Fifo(instance).schedule;
  const Round upper =
      ObjectiveValue(ValidateSchedule(instance, fifo), objective).numerator();
  const Round lower = StartingBound(instance, objective, options.use_packing_bound);
  result.upper_bound = Rational(upper);
  result.lower_bound = Rational(std::min(lower, upper));

  DeadlineSearch search(instance, options, result.nodes_explored);
  bool found = false;
  try {
    for (Round bound = lower; bound < upper; ++bound) {
      std::vector<Round> deadline(m);
      for (PacketId j = 0; j < m; ++j) {
        deadline[j] = bound + (objective == Objective::kMaxFlow
                                   ? instance.packet(j).release
                                   : 0);
      }
      std::vector<std::vector<Call>> rounds;
      if (search.Run(std::move(deadline), rounds)) {
        result.schedule = Schedule{1, std::move(rounds)};
        result.value = Rational(bound);
        found = true;
        break;
      }
      result.lower_bound = Rational(bound + 1);
    }
  } catch (const BudgetExhausted&) {
    result.status = OracleStatus::kUnknown;
    return result;
  }
  if (!found) {
    result.schedule = fifo;
    result.value = Rational(upper);
  }
  result.status = OracleStatus::kOptimal;
  result.lower_bound = result.upper_bound = result.value;
  const Rational achieved =
      ObjectiveValue(ValidateSchedule(instance, result.schedule), objective);
  if (achieved != result.value) {
    throw std::logic_error("exact search returned a schedule of value " +
                           std::to_string(achieved.numerator()) +
                           " for bound " +
                           std::to_string(result.value.numerator()));
  }
  return result;
}

////////////////////////////////////////////////////////////////////////////////
// Induced matchings
////////////////////////////////////////////////////////////////////////////////

void CheckBipartite(const BipartiteGraph& graph) {
  if (graph.u_count < 0 || graph.v_count < 0) {
    throw InvalidArgumentError("bipartite side sizes must be nonnegative");
  }
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : graph.edges) {
    if (a < 0 || a >= graph.u_count || b < 0 || b >= graph.v_count) {
      throw InvalidArgumentError("edge (" + std::to_string(a) + "," +
                                 std::to_string(b) +
                                 ") does not join U and V");
    }
    if (!seen.emplace(a, b).second) {
      throw InvalidArgumentError("duplicate bipartite edge (" +
                                 std::to_string(a) + "," + std::to_string(b) +
                                 ")");
    }
  }
}

namespace {

bool EdgesConflict(const std::set<std::pair<int, int>>& edges,
                   const std::pair<int, int>& e, const std::pair<int, int>& f) {
  return e.first == f.first || e.second == f.second ||
         edges.contains({e.first, f.second}) ||
         edges.contains({f.first, e.second});
}

class InducedMatchingSearch {
 public:
  explicit InducedMatchingSearch(const BipartiteGraph& graph)
      : edges_(graph.edges) {
    std::sort(edges_.begin(), edges_.end());
    const std::set<std::pair<int, int>> lookup(edges_.begin(), edges_.end());
    const std::size_t n = edges_.size();
    compatible_.assign(n, boost::dynamic_bitset<>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b && !EdgesConflict(lookup, edges_[a], edges_[b])) {
          compatible_[a].set(b);
        }
      }
    }
    u_count_ = graph.u_count;
    v_count_ = graph.v_count;
  }

  std::vector<std::pair<int, int>> Solve() {
    boost::dynamic_bitset<> all(edges_.size());
    all.set();
    Search(all);
    std::vector<std::pair<int, int>> matching;
    for (const std::size_t i : best_) matching.push_back(edges_[i]);
    return matching;
  }

 private:
  // Each U node and each V node carries at most one chosen edge.
  std::size_t UpperBound(const boost::dynamic_bitset<>& available) const {
    std::vector<bool> u(u_count_), v(v_count_);
    std::size_t us = 0, vs = 0;
    for (auto i = available.find_first(); i != available.npos;
         i = available.find_next(i)) {
      if (!u[edges_[i].first]) u[edges_[i].first] = true, ++us;
      if (!v[edges_[i].second]) v[edges_[i].second] = true, ++vs;
    }
    return std::min(us, vs);
  }

  void Search(boost::dynamic_bitset<> available) {
    if (chosen_.size() + UpperBound(available) <= best_.size()) return;
    const auto pick = available.find_first();
    if (pick == available.npos) {
      best_ = chosen_;
      return;
    }
    available.reset(pick);
    chosen_.push_back(pick);
    Search(available & compatible_[pick]);
    chosen_.pop_back();
    Search(available);
  }

  std::vector<std::pair<int, int>> edges_;
  std::vector<boost::dynamic_bitset<>> compatible_;
  int u_count_ = 0;
  int v_count_ = 0;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
};

}  // namespace

bool IsInducedMatching(const BipartiteGraph& graph,
                       std::span<const std::pair<int, int>> matching) {
  const std::set<std::pair<int, int>> edges(graph.edges.begin(),
                                            graph.edges.end());
  for (std::size_t a = 0; a < matching.size(); ++a) {
    if (!edges.contains(matching[a])) return false;
    for (std::size_t b = a + 1; b < matching.size(); ++b) {
      if (EdgesConflict(edges, matching[a], matching[b])) return false;
    }
  }
  return true;
}

std::vector<std::pair<int, int>> MaximumInducedMatching(
    const BipartiteGraph& graph) {
  CheckBipartite(graph);
  return InducedMatchingSearch(graph).Solve();
}

int MaxInducedMatchingSize(const BipartiteGraph& graph) {
  return static_cast<int>(MaximumInducedMatching(graph).size());
}

}  // namespace wgp
