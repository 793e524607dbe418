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

#include "hybridchain/ledger/block.hpp"

#include <functional>
#include <map>

namespace hybridchain::ledger
{
   struct BlockTemplate
   {
      std::uint64_t height = 0;
      std::uint64_t round  = 0;
      Address       proposer;
      Hash          parentHash;
      Millis        timestamp = 0;
      std::uint64_t gasLimit  = 0;
   };

   /// Next on-chain nonce for a sender.
   using NonceLookup = std::function<std::uint64_t(const Address&)>;

   /// A transaction whose own gas limit exceeds the block gas limit is dropped
   /// after this many packing attempts.
   inline constexpr int oversized_attempt_limit = 3;

   /// Pending transactions in FIFO order: arrival time, ties broken by txId.
   class TxPool
   {
     public:
      /// Returns false when the txId is already pooled.
      bool add(Transaction tx, Millis arrival);
      void remove(const Hash& txId);
      void remove_included(const Block& block);

      bool        contains(const Hash& txId) const { return byId_.contains(txId); }
      std::size_t size() const { return entries_.size(); }
      bool        empty() const { return entries_.empty(); }

      std::vector<Transaction> snapshot() const;

      /// Oversized transactions dropped since the last call.
      std::vector<Transaction> take_dropped();

     private:
      friend Block build_block(TxPool& pool, const BlockTemplate& tmpl, const NonceLookup& nonces);

      struct Key
      {
         Millis arrival;
         Hash   txId;
         friend auto operator<=>(const Key&, const Key&) = default;
      };
      struct Entry
      {
         Transaction tx;
         int         oversizedAttempts = 0;
      };

      std::map<Key, Entry>     entries_;
      std::map<Hash, Key>      byId_;
      std::vector<Transaction> dropped_;
   };

   /// Greedy FIFO packing: walks the pool in order and includes transactions
   /// while the cumulative gas stays within tmpl.gasLimit, stopping at the first
   /// one that no longer fits. Included transactions stay pooled until the block
   /// is finalized. With `nonces`, a transaction is only eligible when its nonce
   /// is the sender's next one; stale nonces are evicted.
   Block build_block(TxPool& pool, const BlockTemplate& tmpl, const NonceLookup& nonces = {});
}  // namespace hybridchain::ledger
