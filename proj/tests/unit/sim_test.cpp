// Copyright 2026 The hybridchain Authors
//
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

#include "hybridchain/sim/network.hpp"

#include <gtest/gtest.h>

using namespace hybridchain;
using namespace hybridchain::sim;

TEST(Latency, ParseAndFormat)
{
   EXPECT_EQ(LatencyDist::parse("uniform(450,700)"), LatencyDist::uniform(450, 700));
   EXPECT_EQ(LatencyDist::parse("fixed(5)"), LatencyDist::fixed(5));
   EXPECT_EQ(LatencyDist::parse("lognormal(6, 0.5)"), LatencyDist::lognormal(6, 0.5));
   EXPECT_EQ(LatencyDist::parse(LatencyDist::uniform(1, 2).str()), LatencyDist::uniform(1, 2));
   EXPECT_THROW(LatencyDist::parse("uniform(5)"), std::invalid_argument);
   EXPECT_THROW(LatencyDist::parse("uniform(9,1)"), std::invalid_argument);
   EXPECT_THROW(LatencyDist::parse("gamma(1,2)"), std::invalid_argument);
   EXPECT_THROW(LatencyDist::parse("fixed(-1)"), std::invalid_argument);
}

TEST(Latency, SamplesStayInBoundsAndMeanMatches)
{
   auto   d = LatencyDist::uniform(450, 700);
   Rng    r(1);
   double sum = 0;
   for (int i = 0; i < 20000; ++i)
   {
      auto v = d.sample(r);
      ASSERT_GE(v, 450);
      ASSERT_LE(v, 700);
      sum += static_cast<double>(v);
   }
   EXPECT_NEAR(sum / 20000, 575.0, 3.0);
   EXPECT_DOUBLE_EQ(d.mean(), 575.0);
   EXPECT_EQ(LatencyDist::fixed(12.4).sample(r), 12);
}

TEST(EventQueue, FiresInTimeThenSchedulingOrder)
{
   EventQueue       q;
   std::vector<int> order;
   q.schedule(10, [&] { order.push_back(2); });
   q.schedule(5, [&] { order.push_back(1); });
   q.schedule(10, [&] { order.push_back(3); });
   q.schedule(0, [&] {
      order.push_back(0);
      q.schedule(10, [&] { order.push_back(4); });
   });
   EXPECT_EQ(q.run_until(), 10);
   EXPECT_EQ(order, (std::vector<int>{0, 1, 2, 3, 4}));
}

TEST(EventQueue, StopTimeAndHalt)
{
   EventQueue q;
   int        fired = 0;
   q.schedule(5, [&] { ++fired; });
   q.schedule(20, [&] { ++fired; });
   q.run_until(10);
   EXPECT_EQ(fired, 1);
   EXPECT_EQ(q.pending(), 1u);
   q.schedule_at(12, [&] {
      ++fired;
      q.halt();
   });
   q.run_until();
   EXPECT_EQ(fired, 2);
   EXPECT_EQ(q.pending(), 1u);
}

TEST(EventQueue, RejectsNegativeDelayAndPastTimes)
{
   EventQueue q;
   EXPECT_THROW(q.schedule(-1, [] {}), std::invalid_argument);
   q.schedule(10, [] {});
   q.run_until();
   EXPECT_THROW(q.schedule_at(5, [] {}), std::invalid_argument);
}

TEST(EventQueue, EventCapRaisesLivelockGuard)
{
   EventQueue            q(100);
   std::function<void()> loop = [&] { q.schedule(1, loop); };
   q.schedule(0, loop);
   EXPECT_THROW(q.run_until(), LivelockGuard);
}

namespace
{
   struct Mesh
   {
      EventQueue              queue;
      Network                 net;
      std::vector<Envelope>   received;

      explicit Mesh(FaultPlan faults)
          : net(queue, LatencyModel{LatencyDist::fixed(10), LatencyDist::fixed(20), LatencyDist::fixed(5)}, 1,
                std::move(faults))
      {
         for (NodeId n = 0; n < 3; ++n)
            net.attach(n, [this](const Envelope& e) { received.push_back(e); });
      }
   };
}  // namespace

TEST(Network, DeliversAfterLinkDelay)
{
   Mesh m({});
   m.net.send(0, 1, LinkClass::Consensus, "x", Bytes{1});
   m.net.send(0, 2, LinkClass::Enclave, "y", Bytes{2});
   m.queue.run_until();
   ASSERT_EQ(m.received.size(), 2u);
   EXPECT_EQ(m.received[0].to, 1u);
   EXPECT_EQ(m.queue.now(), 20);
   EXPECT_EQ(m.net.counters().delivered, 2u);
}

TEST(Network, PartitionDropsBothDirectionsInsideWindow)
{
   FaultPlan f;
   f.partitions.push_back({{0}, {1}, 0, 100});
   Mesh m(f);
   m.net.send(0, 1, LinkClass::Consensus, "x", {});
   m.net.send(1, 0, LinkClass::Consensus, "x", {});
   m.net.send(0, 2, LinkClass::Consensus, "x", {});
   m.queue.run_until();
   EXPECT_EQ(m.received.size(), 1u);
   EXPECT_EQ(m.net.counters().droppedPartition, 2u);

   m.queue.schedule_at(100, [&] { m.net.send(0, 1, LinkClass::Consensus, "x", {}); });
   m.queue.run_until();
   EXPECT_EQ(m.received.size(), 2u);
}

TEST(Network, CrashedNodeNeitherReceivesNorSends)
{
   FaultPlan f;
   f.crashes.push_back({2, 0});
   Mesh m(f);
   m.net.send(0, 2, LinkClass::Consensus, "x", {});
   m.net.send(2, 0, LinkClass::Consensus, "x", {});
   m.queue.run_until();
   EXPECT_TRUE(m.received.empty());
   EXPECT_EQ(m.net.counters().droppedCrash, 2u);
   EXPECT_TRUE(m.net.crashed(2));
   EXPECT_FALSE(m.net.crashed(1));
}

TEST(Network, WiretapSeesEveryMessage)
{
   FaultPlan f;
   f.crashes.push_back({1, 0});
   Mesh m(f);
   int  seen = 0;
   m.net.add_wiretap([&](const Envelope&) { ++seen; });
   m.net.send(0, 1, LinkClass::Consensus, "x", {});
   m.queue.run_until();
   EXPECT_EQ(seen, 1);
}
