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

#include "hybridchain/consensus/validator_set.hpp"
#include "hybridchain/ledger/transaction.hpp"

#include <vector>

namespace hybridchain::ledger
{
   struct CommitSeal
   {
      Address validator;
      Bytes   signature;

      friend bool operator==(const CommitSeal&, const CommitSeal&) = default;
   };

   /// `round` and `proposer` record the round in which the block contents were
   /// first proposed; a prepared block re-proposed in a later round keeps them,
   /// and therefore keeps its hash.
   struct Block
   {
      std::uint64_t            height = 0;
      std::uint64_t            round  = 0;
      Address                  proposer;
      Hash                     parentHash;
      Millis                   timestamp = 0;
      std::vector<Transaction> transactions;
      std::uint64_t            gasUsed = 0;
      std::vector<CommitSeal>  commitSeals;

      friend bool operator==(const Block&, const Block&) = default;
   };

   /// Canonical encoding of every field except the commit seals.
   Bytes hash_preimage(const Block& block);
   Hash  hash_block(const Block& block);

   Bytes      commit_seal_preimage(const Hash& blockHash);
   CommitSeal make_commit_seal(const Hash& blockHash, const crypto::SigningKey& key);
   bool       verify_commit_seal(const Hash& blockHash, const CommitSeal& seal);

   /// Height 0, zero parent hash, no transactions, no seals.
   Block make_genesis(const consensus::ValidatorSet& validators, Millis timestamp = 0);

   void  encode(Encoder& e, const Block& block);
   Block decode_block(Decoder& d);
   Bytes encode(const Block& block);
}  // namespace hybridchain::ledger
