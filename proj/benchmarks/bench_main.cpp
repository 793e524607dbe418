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

#include "hybridchain/harness/isolation.hpp"
#include "hybridchain/harness/scenario.hpp"
#include "hybridchain/ledger/tx_pool.hpp"

#include <benchmark/benchmark.h>

using namespace hybridchain;

namespace
{
   void BM_Sha256(benchmark::State& state)
   {
      Bytes data(static_cast<std::size_t>(state.range(0)), 0xab);
      for (auto _ : state)
         benchmark::DoNotOptimize(crypto::sha256(data));
      state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
   }
   BENCHMARK(BM_Sha256)->Arg(64)->Arg(4096);

   void BM_VerifyTransaction(benchmark::State& state)
   {
      crypto::Seed seed;
      seed.raw()[0] = 1;
      auto                key = crypto::SigningKey::from_seed(seed);
      ledger::Transaction tx;
      tx.sender   = key.address();
      tx.kind     = ledger::PublicCall{"RegistrationAD", "register", {0}};
      tx.gasLimit = 41'000;
      ledger::seal(tx, key);
      for (auto _ : state)
         benchmark::DoNotOptimize(ledger::verify_transaction(tx));
   }
   BENCHMARK(BM_VerifyTransaction);

   void BM_BuildBlock(benchmark::State& state)
   {
      std::vector<ledger::Transaction> txs;
      for (std::int64_t i = 0; i < state.range(0); ++i)
      {
         crypto::Seed seed;
         seed.raw()[0] = static_cast<std::uint8_t>(i);
         seed.raw()[1] = static_cast<std::uint8_t>(i >> 8);
         auto                key = crypto::SigningKey::from_seed(seed);
         ledger::Transaction tx;
         tx.sender   = key.address();
         tx.kind     = ledger::PublicCall{"RegistrationAD", "register", {0}};
         tx.gasLimit = 41'000;
         ledger::seal(tx, key);
         txs.push_back(tx);
      }
      for (auto _ : state)
      {
         state.PauseTiming();
         ledger::TxPool pool;
         for (std::size_t i = 0; i < txs.size(); ++i)
            pool.add(txs[i], static_cast<Millis>(i));
         state.ResumeTiming();
         ledger::BlockTemplate t;
         t.height   = 1;
         t.gasLimit = 8'000'000;
         benchmark::DoNotOptimize(ledger::build_block(pool, t, [](const Address&) { return std::uint64_t{0}; }));
      }
   }
   BENCHMARK(BM_BuildBlock)->Arg(500);

   void BM_NeedleScan(benchmark::State& state)
   {
      harness::NeedleIndex idx;
      for (int n = 0; n < state.range(0); ++n)
      {
         Bytes needle(32);
         for (std::size_t i = 0; i < needle.size(); ++i)
            needle[i] = static_cast<std::uint8_t>(n * 31 + static_cast<int>(i) * 7 + 1);
         idx.add({Hash{}, "n", needle});
      }
      Bytes hay(1 << 16);
      for (std::size_t i = 0; i < hay.size(); ++i)
         hay[i] = static_cast<std::uint8_t>(i * 2654435761u >> 13);
      for (auto _ : state)
         benchmark::DoNotOptimize(idx.find_all(hay));
      state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * static_cast<std::int64_t>(hay.size()));
   }
   BENCHMARK(BM_NeedleScan)->Arg(100)->Arg(1000);

   void BM_PaperDefaultRun(benchmark::State& state)
   {
      auto cfg = harness::paper_default();
      for (auto _ : state)
         benchmark::DoNotOptimize(harness::run_scenario(cfg));
   }
   BENCHMARK(BM_PaperDefaultRun)->Unit(benchmark::kMillisecond);

   void BM_IdleConsensusRun(benchmark::State& state)
   {
      auto cfg              = harness::paper_default();
      cfg.runDurationMs     = 60'000;
      cfg.validators        = static_cast<std::size_t>(state.range(0));
      cfg.workload.domains  = 0;
      cfg.workload.providers = 0;
      cfg.workload.selects  = 0;
      cfg.workload.deploys  = 0;
      cfg.workload.batches  = 0;
      for (auto _ : state)
         benchmark::DoNotOptimize(harness::run_scenario(cfg));
   }
   BENCHMARK(BM_IdleConsensusRun)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);
}  // namespace
BENCHMARK_MAIN();
