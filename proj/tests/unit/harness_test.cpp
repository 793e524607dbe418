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

#include "hybridchain/harness/config.hpp"
#include "hybridchain/harness/isolation.hpp"
#include "hybridchain/harness/metrics.hpp"
#include "hybridchain/harness/report.hpp"
#include "helpers.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

using namespace hybridchain;
using namespace hybridchain::harness;

namespace
{
   std::string validation_message(std::string_view text)
   {
      try
      {
         parse_config(text);
      }
      catch (const ValidationError& e)
      {
         return e.what();
      }
      return "";
   }
}  // namespace

TEST(Config, PaperDefaultPreset)
{
   auto c = paper_default();
   EXPECT_EQ(c.validators, 4u);
   EXPECT_EQ(c.members, 3u);
   EXPECT_EQ(c.ibft.blockInterval, 5000);
   EXPECT_EQ(c.ibft.baseRoundTimeout, 10000);
   EXPECT_EQ(c.ibft.gasLimit, 8'000'000u);
   EXPECT_EQ(c.latency.consensus, sim::LatencyDist::uniform(450, 700));
   EXPECT_EQ(c.latency.enclave, sim::LatencyDist::uniform(400, 2600));
   EXPECT_EQ(c.latency.rpc, sim::LatencyDist::uniform(100, 300));
   EXPECT_DOUBLE_EQ(c.privacy.tamperRate, 0.15);
   EXPECT_EQ(c.workload.domains, 100u);
   EXPECT_EQ(c.workload.providers, 40u);
   EXPECT_EQ(c.workload.selects, 60u);
   EXPECT_NO_THROW(validate(c));
}

TEST(Config, ParsesOverridesAndFaults)
{
   auto c = parse_config(R"(
seed = 42            # comment
[network]
validators = 7
block_interval_ms = 2500
[latency]
rpc = fixed(50)
[privacy]
marker_mode = parallel
[workload]
domains = 10
providers = 4
selects = 6
deploys = 3
batches = 1
[faults]
crash = 2@30000
partition = 0,1|2,3@1000-2000
byzantine = 1:equivocate,withhold_votes
)");
   EXPECT_EQ(c.seed, 42u);
   EXPECT_EQ(c.validators, 7u);
   EXPECT_EQ(c.ibft.blockInterval, 2500);
   EXPECT_EQ(c.latency.rpc, sim::LatencyDist::fixed(50));
   EXPECT_EQ(c.privacy.markerMode, node::MarkerMode::Parallel);
   ASSERT_EQ(c.crashes.size(), 1u);
   EXPECT_EQ(c.crashes[0].node, 2u);
   EXPECT_EQ(c.crashes[0].at, 30000);
   ASSERT_EQ(c.partitions.size(), 1u);
   EXPECT_EQ(c.partitions[0].a, (std::set<NodeId>{0, 1}));
   EXPECT_EQ(c.partitions[0].to, 2000);
   ASSERT_TRUE(c.byzantine.contains(1));
   EXPECT_TRUE(c.byzantine[1].equivocate);
   EXPECT_TRUE(c.byzantine[1].withholdVotes);
   EXPECT_FALSE(c.byzantine[1].doubleVote);
}

TEST(Config, ParseErrorsNameLineAndKey)
{
   try
   {
      parse_config("[network]\nvalidators = four\n");
      FAIL();
   }
   catch (const ParseError& e)
   {
      EXPECT_EQ(e.line, 2u);
      EXPECT_EQ(e.field, "validators");
   }
   EXPECT_THROW(parse_config("[nowhere]\n"), ParseError);
   EXPECT_THROW(parse_config("[network]\nbogus = 1\n"), ParseError);
   EXPECT_THROW(parse_config("[network\n"), ParseError);
   EXPECT_THROW(parse_config("validators\n"), ParseError);
   EXPECT_THROW(parse_config("preset = other\n"), ParseError);
   EXPECT_THROW(parse_config("[latency]\nrpc = gamma(1)\n"), ParseError);
   EXPECT_THROW(parse_config("[faults]\ncrash = 2\n"), ParseError);
   EXPECT_THROW(parse_config("[faults]\nbyzantine = 1:teleport\n"), ParseError);
}

TEST(Config, ValidationNamesTheInvariant)
{
   EXPECT_NE(validation_message("[network]\nvalidators = 0\n").find("validators"), std::string::npos);
   EXPECT_NE(validation_message("[workload]\npublish_per_provider = 6\n").find("5"), std::string::npos);
   EXPECT_NE(validation_message("[workload]\nproviders = 101\n"), "");
   EXPECT_NE(validation_message("[workload]\nselects = 61\ndeploys = 61\n"), "");
   EXPECT_NE(validation_message("[workload]\ndeploys = 61\n"), "");
   EXPECT_NE(validation_message("[workload]\nbatches = 61\n"), "");
   EXPECT_NE(validation_message("[privacy]\ntamper_rate = 1.5\n"), "");
   EXPECT_NE(validation_message("[network]\nblock_interval_ms = 0\n"), "");
   EXPECT_NE(validation_message("[faults]\ncrash = 9@10\n"), "");
   EXPECT_NE(validation_message("[faults]\nbyzantine = 5:equivocate\n"), "");
   EXPECT_NE(validation_message("[faults]\nbyzantine = 0:equivocate\nbyzantine = 1:equivocate\n"), "");
   EXPECT_EQ(validation_message("[workload]\npublish_per_provider = 5\n"), "");
}

TEST(Config, TextRoundTrip)
{
   auto c = paper_default();
   c.seed = 9;
   c.crashes.push_back({1, 500});
   c.partitions.push_back({{0}, {2, 3}, 10, 20});
   consensus::ByzantineBehavior b;
   b.doubleVote    = true;
   c.byzantine[3]  = b;
   c.privacy.markerMode = node::MarkerMode::Parallel;
   auto back = parse_config(to_text(c));
   EXPECT_EQ(to_text(back), to_text(c));
   EXPECT_EQ(back.seed, 9u);
   EXPECT_TRUE(back.byzantine.at(3).doubleVote);
   EXPECT_EQ(back.partitions[0].b, (std::set<NodeId>{2, 3}));
}

TEST(Config, LoadMissingFileIsIoError)
{
   EXPECT_THROW(load_config("/nonexistent/dir/x.conf"), IoError);
}

TEST(Metrics, NearestRankOracle)
{
   std::vector<Millis> v;
   for (Millis i = 1; i <= 20; ++i)
      v.push_back(i * 10);
   // rank = ceil(p / 100 * n)
   EXPECT_EQ(nearest_rank(v, 50), 100);
   EXPECT_EQ(nearest_rank(v, 95), 190);
   EXPECT_EQ(nearest_rank(v, 100), 200);
   EXPECT_EQ(nearest_rank(v, 0), 10);
   EXPECT_EQ(nearest_rank({7}, 95), 7);
   EXPECT_EQ(nearest_rank({1, 2, 3}, 50), 2);
}

TEST(Metrics, StatsArePopulationMoments)
{
   auto s = compute_stats({4, 2, 8, 6});
   EXPECT_EQ(s.count, 4u);
   EXPECT_DOUBLE_EQ(s.mean, 5.0);
   EXPECT_DOUBLE_EQ(s.stddev, std::sqrt(5.0));
   EXPECT_EQ(s.min, 2);
   EXPECT_EQ(s.max, 8);
   EXPECT_EQ(s.p50, 4);
   EXPECT_EQ(compute_stats({}).count, 0u);
   EXPECT_DOUBLE_EQ(compute_stats({}).cv(), 0.0);
}

TEST(Metrics, KindNamesAndMethods)
{
   EXPECT_EQ(to_string(TxKind::DeployPrivate), "deploy_private");
   EXPECT_EQ(kind_from_method("publish_service"), TxKind::Publish);
   EXPECT_EQ(kind_from_method("commit_breach_batch"), TxKind::BreachBatch);
   EXPECT_FALSE(kind_from_method("view_breaches"));
   EXPECT_TRUE(is_private(TxKind::RegisterBreach));
   EXPECT_FALSE(is_private(TxKind::Select));
}

TEST(Metrics, SummarizeSplitsPublicAndPrivate)
{
   std::vector<LatencySample> s = {
       {fixtures::hash_of("a"), TxKind::Register, 0, 100, std::nullopt, 1, std::nullopt},
       {fixtures::hash_of("b"), TxKind::Select, 0, 300, std::nullopt, 2, std::nullopt},
       {fixtures::hash_of("c"), TxKind::RegisterBreach, 0, 900, 800, std::nullopt, fixtures::hash_of("g")},
   };
   auto r = summarize(s);
   EXPECT_EQ(r.publicAll.count, 2u);
   EXPECT_DOUBLE_EQ(r.publicAll.mean, 200.0);
   EXPECT_EQ(r.perKind.at(TxKind::RegisterBreach).count, 1u);
   EXPECT_EQ(r.perKind.at(TxKind::Publish).count, 0u);
   EXPECT_EQ(enclave_components(s), (std::vector<Millis>{800}));
   EXPECT_EQ(public_latencies(s), (std::vector<Millis>{100, 300}));
}

TEST(Report, CsvHasHeaderOneRowPerSampleAndEmptyColumns)
{
   std::vector<LatencySample> samples;
   for (int i = 0; i < 100; ++i)
      samples.push_back({fixtures::hash_of(std::to_string(i)), TxKind::Publish, i, i + 5000, std::nullopt,
                         static_cast<std::uint64_t>(i), std::nullopt});
   samples[3].kind      = TxKind::RegisterBreach;
   samples[3].enclaveMs = 1234;
   samples[3].groupId   = fixtures::hash_of("g");
   auto text = csv_text(samples);
   EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 101);

   std::istringstream in(text);
   std::string        line;
   std::getline(in, line);
   EXPECT_EQ(line, csv_header);
   std::getline(in, line);
   EXPECT_EQ(line, fixtures::hash_of("0").str() + ",publish,0,5000,5000,,0,");
   for (int i = 0; i < 3; ++i)
      std::getline(in, line);
   EXPECT_EQ(line, fixtures::hash_of("3").str() + ",register_breach,3,5003,5000,1234,3," + fixtures::hash_of("g").str());
}

TEST(Report, SummaryHasSectionsAndFixedDecimals)
{
   MetricsReport r = summarize({{fixtures::hash_of("a"), TxKind::Register, 0, 1001, std::nullopt, 1, std::nullopt}});
   r.blocks        = 3;
   auto text       = summary_text(r, paper_default());
   for (auto section : {"[run]", "[counters]", "[kind.register]", "[kind.breach_batch]", "[kind.public]"})
      EXPECT_NE(text.find(section), std::string::npos) << section;
   EXPECT_NE(text.find("mean_ms = 1001.000"), std::string::npos);
   EXPECT_EQ(format_ms(2.5), "2.500");
}

TEST(Isolation, NeedleIndexFindsEveryOccurrenceOnce)
{
   NeedleIndex idx;
   EXPECT_THROW(idx.add({fixtures::hash_of("g"), "short", Bytes{1, 2, 3}}), std::invalid_argument);
   Bytes a(16), b(12);
   for (std::size_t i = 0; i < a.size(); ++i)
      a[i] = static_cast<std::uint8_t>(i + 1);
   for (std::size_t i = 0; i < b.size(); ++i)
      b[i] = static_cast<std::uint8_t>(100 + i);
   idx.add({fixtures::hash_of("g"), "a", a});
   idx.add({fixtures::hash_of("g"), "b", b});

   Bytes hay;
   hay.reserve(5 + 2 * a.size() + b.size());
   hay.resize(5, 0);
   append(hay, a);
   append(hay, b);
   append(hay, a);
   EXPECT_EQ(idx.find_all(hay), (std::vector<std::size_t>{0, 1}));

   Bytes partial(a.begin(), a.end() - 1);
   EXPECT_TRUE(idx.find_all(partial).empty());
   // Shares the eight-byte prefix but differs later.
   Bytes lookalike = a;
   lookalike[12] ^= 1;
   EXPECT_TRUE(idx.find_all(lookalike).empty());
}
