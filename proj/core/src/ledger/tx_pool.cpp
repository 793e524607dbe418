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

#include "hybridchain/ledger/tx_pool.hpp"

#include <utility>

namespace hybridchain::ledger
{
   bool TxPool::add(Transaction tx, Millis arrival)
   {
      if (byId_.contains(tx.txId))
         return false;
      Key key{arrival, tx.txId};
      byId_.emplace(tx.txId, key);
      entries_.emplace(key, Entry{std::move(tx)});
      return true;
   }

   void TxPool::remove(const Hash& txId)
   {
      auto it = byId_.find(txId);
      if (it == byId_.end())
         return;
      entries_.erase(it->second);
      byId_.erase(it);
   }

   void TxPool::remove_included(const Block& block)
   {
      for (const auto& tx : block.transactions)
         remove(tx.txId);
   }

   std::vector<Transaction> TxPool::snapshot() const
   {
      std::vector<Transaction> out;
      out.reserve(entries_.size());
      for (const auto& [_, e] : entries_)
         out.push_back(e.tx);
      return out;
   }

   std::vector<Transaction> TxPool::take_dropped() { return std::exchange(dropped_, {}); }

   Block build_block(TxPool& pool, const BlockTemplate& tmpl, const NonceLookup& nonces)
   {
      Block block;
      block.height     = tmpl.height;
      block.round      = tmpl.round;
      block.proposer   = tmpl.proposer;
      block.parentHash = tmpl.parentHash;
      block.timestamp  = tmpl.timestamp;

      std::uint64_t              gas = 0;
      std::map<Address, std::uint64_t> expected;
      std::vector<Hash>          evict;

      for (auto& [key, entry] : pool.entries_)
      {
         const auto& tx = entry.tx;
         if (tx.gasLimit > tmpl.gasLimit)
         {
            if (++entry.oversizedAttempts >= oversized_attempt_limit)
               evict.push_back(tx.txId);
            continue;
         }
         if (nonces)
         {
            auto it = expected.find(tx.sender);
            auto next = it != expected.end() ? it->second : nonces(tx.sender);
            if (tx.nonce < next)
            {
               evict.push_back(tx.txId);
               continue;
            }
            if (tx.nonce > next)
               continue;
         }
         if (gas + tx.gasLimit > tmpl.gasLimit)
            break;
         gas += tx.gasLimit;
         expected[tx.sender] = tx.nonce + 1;
         block.transactions.push_back(tx);
      }

      for (const auto& id : evict)
      {
         auto key = pool.byId_.at(id);
         auto& e  = pool.entries_.at(key);
         if (e.oversizedAttempts >= oversized_attempt_limit)
            pool.dropped_.push_back(e.tx);
         pool.remove(id);
      }
      block.gasUsed = gas;
      return block;
   }
}  // namespace hybridchain::ledger
