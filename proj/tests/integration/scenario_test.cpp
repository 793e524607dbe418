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

#include "hybridchain/harness/report.hpp"
#include "hybridchain/harness/scenario.hpp"
#include "../unit/helpers.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace hybridchain;
using namespace hybridchain::harness;

TEST(Scenario, EveryPlannedRequestYieldsOneSample)
{
   auto cfg = paper_default();
   auto r   = run_scenario(cfg);
   const auto& w = cfg.workload;
   std::uint64_t planned = w.domains + w.providers * w.publishPerProvider + w.selects +
                           w.deploys * (1 + w.breachesPerGroup) + w.batches;
   EXPECT_EQ(r.plannedRequests, planned);
   EXPECT_TRUE(r.workloadComplete);
   EXPECT_EQ(r.samples.size() + r.rejections.size(), planned);
   EXPECT_TRUE(r.rejections.empty());
   EXPECT_FALSE(r.violated());
   EXPECT_LT(r.endTime, cfg.runDurationMs);

   std::map<TxKind, std::size_t> counts;
   for (const auto& s : r.samples)
   {
      ++counts[s.kind];
      EXPECT_GT(s.latency(), 0);
      EXPECT_EQ(s.enclaveMs.has_value(), is_private(s.kind));
      EXPECT_EQ(s.groupId.has_value(), is_private(s.kind));
      EXPECT_TRUE(s.blockHeight.has_value());
   }
   EXPECT_EQ(counts[TxKind::Register], w.domains);
   EXPECT_EQ(counts[TxKind::Publish], w.providers * w.publishPerProvider);
   EXPECT_EQ(counts[TxKind::RegisterBreach], w.deploys * w.breachesPerGroup);
   EXPECT_TRUE(std::is_sorted(r.samples.begin(), r.samples.end(), [](const auto& a, const auto& b) {
      return a.submitMs != b.submitMs ? a.submitMs < b.submitMs : a.txId < b.txId;
   }));
}

TEST(Scenario, PublicReceiptsMatchFinalizationAtTheSendersNode)
{
   auto       cfg = paper_default();
   Simulation sim(cfg);
   std::map<std::pair<NodeId, std::uint64_t>, Millis> finalizedAt;
   sim.observe_finalized([&](NodeId n, const ledger::Block& b, const Hash&, Millis t) {
      finalizedAt.emplace(std::make_pair(n, b.height), t);
   });
   auto r = sim.run();

   const auto& chain   = sim.node(0).chain();
   std::size_t checked = 0;
   for (const auto& s : r.samples)
   {
      ASSERT_TRUE(s.blockHeight);
      ASSERT_LE(*s.blockHeight, chain.head_height());
      const auto& block = chain.at(*s.blockHeight);
      auto it = std::find_if(block.transactions.begin(), block.transactions.end(),
                             [&](const ledger::Transaction& tx) { return tx.txId == s.txId; });
      ASSERT_NE(it, block.transactions.end()) << "sample tx not in its block";
      if (is_private(s.kind))
         continue;
      auto host = sim.directory().hostOf.at(it->sender);
      EXPECT_EQ(s.finalMs, finalizedAt.at({host, *s.blockHeight}));
      ++checked;
   }
   EXPECT_EQ(checked, r.report.publicAll.count);
}

TEST(Scenario, PrivateReceiptsFollowTheirMarker)
{
   auto       cfg = paper_default();
   Simulation sim(cfg);
   std::map<std::pair<NodeId, std::uint64_t>, Millis> finalizedAt;
   sim.observe_finalized([&](NodeId n, const ledger::Block& b, const Hash&, Millis t) {
      finalizedAt.emplace(std::make_pair(n, b.height), t);
   });
   auto r = sim.run();
   for (const auto& s : r.samples)
   {
      if (s.kind != TxKind::DeployPrivate && s.kind != TxKind::BreachBatch)
         continue;
      const auto& block = sim.node(0).chain().at(*s.blockHeight);
      auto it = std::find_if(block.transactions.begin(), block.transactions.end(),
                             [&](const ledger::Transaction& tx) { return tx.txId == s.txId; });
      ASSERT_NE(it, block.transactions.end());
      ASSERT_TRUE(it->is_marker());
      EXPECT_EQ(it->marker()->groupId, *s.groupId);
      auto host = sim.directory().hostOf.at(it->sender);
      EXPECT_GE(s.finalMs, finalizedAt.at({host, *s.blockHeight}));
      EXPECT_GE(s.latency(), *s.enclaveMs);
   }
}

TEST(Scenario, NonMembersHoldNoPrivateState)
{
   auto       cfg = paper_default();
   Simulation sim(cfg);
   auto       r = sim.run();
   std::map<Hash, int> holders;
   for (NodeId n = 0; n < sim.node_count(); ++n)
   {
      for (const auto& g : sim.node(n).private_groups())
         ++holders[g];
      if (n < cfg.validators)
      {
         EXPECT_TRUE(sim.node(n).private_groups().empty());
      }
   }
   EXPECT_EQ(holders.size(), cfg.workload.deploys);
   for (const auto& [g, count] : holders)
      EXPECT_EQ(count, 2);
   EXPECT_EQ(r.report.authFailures, r.report.refetches);
}

TEST(Scenario, SingleValueSweepEqualsPlainRun)
{
   auto cfg   = paper_default();
   auto plain = run_scenario(cfg);
   auto sw    = sweep(cfg, "block-interval", {cfg.ibft.blockInterval});
   ASSERT_EQ(sw.points.size(), 1u);
   EXPECT_EQ(csv_text(sw.points[0].result.samples), csv_text(plain.samples));
   EXPECT_EQ(sw.points[0].enclaveDigest, enclave_multiset_digest(plain.samples));
   EXPECT_THROW(sweep(cfg, "gas-limit", {1}), ValidationError);
   EXPECT_THROW(sweep(cfg, "block-interval", {0}), ValidationError);
}

TEST(Scenario, DifferentSeedsDiffer)
{
   auto a = paper_default();
   auto b = a;
   b.seed = 2;
   EXPECT_NE(csv_text(run_scenario(a).samples), csv_text(run_scenario(b).samples));
}

TEST(Scenario, ParallelMarkerModeCompletes)
{
   auto cfg               = paper_default();
   cfg.privacy.markerMode = node::MarkerMode::Parallel;
   auto r                 = run_scenario(cfg);
   EXPECT_TRUE(r.workloadComplete);
   EXPECT_FALSE(r.violated());
   EXPECT_EQ(r.report.perKind.at(TxKind::DeployPrivate).count, cfg.workload.deploys);
   auto serial = run_scenario(paper_default());
   EXPECT_LE(r.report.perKind.at(TxKind::DeployPrivate).mean, serial.report.perKind.at(TxKind::DeployPrivate).mean);
}

TEST(Scenario, MinorityPartitionHealsWithoutViolation)
{
   auto cfg = paper_default();
   cfg.partitions.push_back({{3}, {0, 1, 2, 4, 5, 6}, 20'000, 80'000});
   auto r = run_scenario(cfg);
   EXPECT_TRUE(r.workloadComplete);
   EXPECT_FALSE(r.violated());
   EXPECT_GT(r.report.network.droppedPartition, 0u);
}

TEST(Scenario, CrashedMemberRejectsItsClients)
{
   auto cfg = paper_default();
   cfg.crashes.push_back({static_cast<NodeId>(cfg.validators), 1});
   cfg.runDurationMs = 200'000;
   auto r            = run_scenario(cfg);
   EXPECT_FALSE(r.rejections.empty());
   EXPECT_FALSE(r.violated());
   EXPECT_FALSE(r.workloadComplete);
}

TEST(Scenario, LargeValidatorSetStaysLive)
{
   auto cfg       = fixtures::idle_config(60'000);
   cfg.validators = 10;
   consensus::ByzantineBehavior b;
   b.equivocate  = true;
   b.doubleVote  = true;
   cfg.byzantine = {{1, b}, {2, b}, {3, b}};
   auto r        = run_scenario(cfg);
   EXPECT_FALSE(r.violated());
   EXPECT_GE(r.report.blocks, 3u);
}

TEST(Scenario, EventCapRaisesLivelockGuard)
{
   RunOptions opt;
   opt.eventCap = 1000;
   EXPECT_THROW(run_scenario(paper_default(), opt), sim::LivelockGuard);
}
