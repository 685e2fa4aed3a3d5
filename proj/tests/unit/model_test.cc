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

#include <gtest/gtest.h>

#include "support/builders.h"

namespace wgp {
namespace {

using testing::Line;
using testing::Star;

TEST(DistanceTest, LineDistances) {
  const Network net = Line(3);
  EXPECT_EQ(net.distance(2, 0), 2);
  EXPECT_EQ(net.distance(1, 1), 0);
  EXPECT_EQ(net.diameter(), 2);
}

TEST(DistanceTest, CompleteGraphIsUnitDistance) {
  std::vector<Edge> edges;
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) edges.push_back({u, v});
  }
  const Network net(4, edges, 0, 1);
  for (int u = 0; u < 4; ++u) {
    for (int v = 0; v < 4; ++v) EXPECT_EQ(net.distance(u, v), u == v ? 0 : 1);
  }
}

TEST(DistanceTest, DisconnectedNetworkIsRejected) {
  EXPECT_THROW(Network(3, {{0, 1}}, 0, 1), InvalidInstanceError);
}

TEST(NetworkTest, RejectsBadEdgesAndParameters) {
  EXPECT_THROW(Network(2, {{0, 0}}, 0, 1), InvalidInstanceError);
  EXPECT_THROW(Network(2, {{0, 1}, {1, 0}}, 0, 1), InvalidInstanceError);
  EXPECT_THROW(Network(2, {{0, 2}}, 0, 1), InvalidInstanceError);
  EXPECT_THROW(Network(2, {{0, 1}}, 5, 1), InvalidInstanceError);
  EXPECT_THROW(Network(2, {{0, 1}}, 0, 0), InvalidInstanceError);
  EXPECT_THROW(Network(0, {}, 0, 1), InvalidInstanceError);
}

TEST(NetworkTest, GammaValues) {
  EXPECT_EQ(Line(3, 1).gamma(), 3);
  EXPECT_EQ(Line(3, 1).gamma0(), 1);
  EXPECT_EQ(Line(3, 2).gamma_ratio(), Rational(4));
  EXPECT_EQ(Line(3, 3).gamma_ratio(), Rational(5, 2));
}

TEST(NetworkTest, NeighborsAreSorted) {
  const Network net(4, {{0, 3}, {0, 1}, {2, 0}}, 0, 1);
  const auto nbrs = net.neighbors(0);
  EXPECT_EQ(std::vector<NodeId>(nbrs.begin(), nbrs.end()),
            (std::vector<NodeId>{1, 2, 3}));
}

TEST(InstanceTest, DerivedQuantities) {
  const Instance inst(Line(4), {{3, 2}, {0, 5}, {1, 0}});
  EXPECT_EQ(inst.hop_distance(0), 3);
  EXPECT_EQ(inst.capped_distance(0), 1);
  EXPECT_EQ(inst.adjusted_release(0), 2 + 3 - 1);
  EXPECT_EQ(inst.capped_distance(1), 0);
  EXPECT_EQ(inst.adjusted_release(1), 5);
  EXPECT_EQ(inst.max_release(), 5);
}

TEST(InstanceTest, RejectsBadPackets) {
  EXPECT_THROW(Instance(Line(2), {{7, 0}}), InvalidInstanceError);
  EXPECT_THROW(Instance(Line(2), {{1, -1}}), InvalidInstanceError);
}

TEST(CompatibleTest, AdjacentCallsOnPathInterfere) {
  const Network net = Line(4);
  // a-b-c-d as 0-1-2-3: calls (0->1) and (2->3), d(2,1) = 1.
  EXPECT_FALSE(Compatible({0, 0, 1}, {1, 2, 3}, net));
}

TEST(CompatibleTest, FarCallsOnPathAreCompatible) {
  const Network net = Line(6);
  EXPECT_TRUE(Compatible({0, 0, 1}, {1, 4, 5}, net));
  EXPECT_FALSE(Compatible({0, 0, 1}, {1, 4, 5}, net, 3));
}

TEST(CompatibleTest, HalfDuplex) {
  const Network net = Line(4);
  EXPECT_FALSE(Compatible({0, 1, 0}, {1, 2, 1}, net));
  EXPECT_FALSE(Compatible({0, 2, 1}, {1, 2, 3}, net));
}

TEST(ValidateTest, TwoHopDelivery) {
  const Instance inst(Line(3), {{2, 0}});
  Schedule s;
  s.rounds = {{{0, 2, 1}}, {{0, 1, 0}}};
  const ScheduleMetrics m = ValidateSchedule(inst, s);
  EXPECT_EQ(m.max_completion, Rational(2));
  EXPECT_EQ(m.max_flow, Rational(2));
  EXPECT_EQ(m.round_count, 2);
}

TEST(ValidateTest, BothHopsInOneRoundAreRejected) {
  const Instance inst(Line(3), {{2, 0}});
  Schedule s;
  s.rounds = {{{0, 2, 1}, {0, 1, 0}}};
  try {
    ValidateSchedule(inst, s);
    FAIL() << "expected a violation";
  } catch (const ScheduleViolation& e) {
    EXPECT_EQ(e.round(), 0);
    EXPECT_TRUE(e.kind() == ViolationKind::kDuplicatePacket ||
                e.kind() == ViolationKind::kNotHolder);
  }
}

TEST(ValidateTest, SenderMustHoldPacket) {
  const Instance inst(Line(3), {{2, 0}});
  Schedule s;
  s.rounds = {{{0, 1, 0}}};
  try {
    ValidateSchedule(inst, s);
    FAIL();
  } catch (const ScheduleViolation& e) {
    EXPECT_EQ(e.kind(), ViolationKind::kNotHolder);
  }
}

TEST(ValidateTest, SpeedScaledCompletion) {
  const Instance inst(Line(3), {{2, 0}});
  Schedule s;
  s.sigma = 4;
  // Delivery in the fourth round, index 3: time 4/4.
  s.rounds = {{{0, 2, 1}}, {}, {}, {{0, 1, 0}}};
  EXPECT_EQ(ValidateSchedule(inst, s).max_completion, Rational(1));
}

TEST(ValidateTest, SpeedScaledReleaseIsEnforced) {
  const Instance inst(Line(2), {{1, 1}});
  Schedule s;
  s.sigma = 4;
  s.rounds = {{}, {}, {}, {{0, 1, 0}}};
  try {
    ValidateSchedule(inst, s);
    FAIL();
  } catch (const ScheduleViolation& e) {
    EXPECT_EQ(e.kind(), ViolationKind::kBeforeRelease);
    EXPECT_EQ(e.round(), 3);
  }
  s.rounds = {{}, {}, {}, {}, {{0, 1, 0}}};
  EXPECT_EQ(ValidateSchedule(inst, s).max_completion, Rational(5, 4));
  EXPECT_EQ(ValidateSchedule(inst, s).max_flow, Rational(1, 4));
}

TEST(ValidateTest, ReportsInterferingPair) {
  const Instance inst(Line(4), {{1, 0}, {3, 0}});
  Schedule s;
  s.rounds = {{{0, 1, 0}, {1, 3, 2}}};
  try {
    ValidateSchedule(inst, s);
    FAIL();
  } catch (const ScheduleViolation& e) {
    EXPECT_EQ(e.kind(), ViolationKind::kInterference);
    const std::string what = e.what();
    EXPECT_NE(what.find("packet 0 1->0"), std::string::npos) << what;
    EXPECT_NE(what.find("packet 1 3->2"), std::string::npos) << what;
  }
}

TEST(ValidateTest, UndeliveredAndInvalidCalls) {
  const Instance inst(Line(3), {{2, 0}});
  Schedule s;
  s.rounds = {{{0, 2, 1}}};
  try {
    ValidateSchedule(inst, s);
    FAIL();
  } catch (const ScheduleViolation& e) {
    EXPECT_EQ(e.kind(), ViolationKind::kNotDelivered);
  }
  s.rounds = {{{0, 2, 0}}};
  try {
    ValidateSchedule(inst, s);
    FAIL();
  } catch (const ScheduleViolation& e) {
    EXPECT_EQ(e.kind(), ViolationKind::kInvalidCall);
  }
  s.rounds = {{{3, 2, 1}}};
  EXPECT_THROW(ValidateSchedule(inst, s), ScheduleViolation);
  s.sigma = 0;
  s.rounds = {};
  try {
    ValidateSchedule(inst, s);
    FAIL();
  } catch (const ScheduleViolation& e) {
    EXPECT_EQ(e.kind(), ViolationKind::kInvalidSigma);
  }
}

TEST(ValidateTest, PacketAtSinkCompletesAtRelease) {
  const Instance inst(Line(2), {{0, 3}});
  const ScheduleMetrics m = ValidateSchedule(inst, Schedule{});
  EXPECT_EQ(m.max_completion, Rational(3));
  EXPECT_EQ(m.max_flow, Rational(0));
}

TEST(ValidateTest, DeliveredPacketCannotMoveAgain) {
  const Instance inst(Line(2), {{1, 0}});
  Schedule s;
  s.rounds = {{{0, 1, 0}}, {{0, 0, 1}}};
  EXPECT_THROW(ValidateSchedule(inst, s), ScheduleViolation);
}

TEST(CanonicalizeTest, SortsCallsInRounds) {
  Schedule s;
  s.rounds = {{{2, 0, 1}, {0, 3, 4}}};
  Canonicalize(s);
  EXPECT_EQ(s.rounds[0][0].packet, 0);
  EXPECT_EQ(ToString(s.rounds[0][0]), "packet 0 3->4");
}

}  // namespace
}  // namespace wgp
