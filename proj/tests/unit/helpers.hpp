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

#pragma once

#include "hybridchain/crypto.hpp"
#include "hybridchain/harness/config.hpp"
#include "hybridchain/ledger/transaction.hpp"

#include <cstdint>

namespace hybridchain::fixtures
{
   inline crypto::Seed seed_of(std::uint64_t n)
   {
      crypto::Seed s;
      for (int i = 0; i < 8; ++i)
         s.raw()[i] = static_cast<std::uint8_t>(n >> (8 * i));
      s.raw()[31] = 0x5a;
      return s;
   }

   inline crypto::SigningKey key_of(std::uint64_t n) { return crypto::SigningKey::from_seed(seed_of(n)); }

   inline Hash hash_of(std::string_view s) { return crypto::sha256(as_bytes(s)); }

   /// A sealed public call from key `n`.
   inline ledger::Transaction public_tx(std::uint64_t n, std::uint64_t nonce, std::string contract,
                                        std::string operation, Bytes args, std::uint64_t gas)
   {
      auto                key = key_of(n);
      ledger::Transaction tx;
      tx.sender   = key.address();
      tx.nonce    = nonce;
      tx.kind     = ledger::PublicCall{std::move(contract), std::move(operation), std::move(args)};
      tx.gasLimit = gas;
      ledger::seal(tx, key);
      return tx;
   }

   /// Config with no client traffic, for consensus-only runs.
   inline harness::ScenarioConfig idle_config(Millis duration)
   {
      auto cfg                        = harness::paper_default();
      cfg.runDurationMs               = duration;
      cfg.workload.domains            = 0;
      cfg.workload.providers          = 0;
      cfg.workload.publishPerProvider = 0;
      cfg.workload.selects            = 0;
      cfg.workload.deploys            = 0;
      cfg.workload.breachesPerGroup   = 0;
      cfg.workload.batches            = 0;
      return cfg;
   }
}  // namespace hybridchain::fixtures
