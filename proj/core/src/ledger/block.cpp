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

#include "hybridchain/ledger/block.hpp"

namespace hybridchain::ledger
{
   namespace
   {
      constexpr std::string_view block_domain = "hybridchain/block/v1";
      constexpr std::string_view seal_domain  = "hybridchain/commit-seal/v1";

      void encode_header(Encoder& e, const Block& b)
      {
         e.u64(b.height).u64(b.round).fixed(b.proposer).fixed(b.parentHash).i64(b.timestamp);
         e.u32(static_cast<std::uint32_t>(b.transactions.size()));
         for (const auto& tx : b.transactions)
            encode(e, tx);
         e.u64(b.gasUsed);
      }
   }  // namespace

   Bytes hash_preimage(const Block& block)
   {
      Encoder e;
      e.str(block_domain);
      encode_header(e, block);
      return std::move(e).take();
   }

   Hash hash_block(const Block& block) { return crypto::sha256(hash_preimage(block)); }

   Bytes commit_seal_preimage(const Hash& blockHash)
   {
      Encoder e;
      e.str(seal_domain).fixed(blockHash);
      return std::move(e).take();
   }

   CommitSeal make_commit_seal(const Hash& blockHash, const crypto::SigningKey& key)
   {
      return {key.address(), key.sign(commit_seal_preimage(blockHash))};
   }

   bool verify_commit_seal(const Hash& blockHash, const CommitSeal& seal)
   {
      return crypto::verify(seal.validator, commit_seal_preimage(blockHash), seal.signature);
   }

   Block make_genesis(const consensus::ValidatorSet& validators, Millis timestamp)
   {
      Block g;
      g.height    = 0;
      g.round     = 0;
      g.proposer  = validators.at(0);
      g.timestamp = timestamp;
      return g;
   }

   void encode(Encoder& e, const Block& block)
   {
      encode_header(e, block);
      e.u32(static_cast<std::uint32_t>(block.commitSeals.size()));
      for (const auto& s : block.commitSeals)
         e.fixed(s.validator).bytes(s.signature);
   }

   Block decode_block(Decoder& d)
   {
      Block b;
      b.height     = d.u64();
      b.round      = d.u64();
      b.proposer   = d.fixed<Address>();
      b.parentHash = d.fixed<Hash>();
      b.timestamp  = d.i64();
      auto ntx     = d.u32();
      b.transactions.reserve(ntx);
      for (std::uint32_t i = 0; i < ntx; ++i)
         b.transactions.push_back(decode_transaction(d));
      b.gasUsed   = d.u64();
      auto nseals = d.u32();
      for (std::uint32_t i = 0; i < nseals; ++i)
      {
         CommitSeal s;
         s.validator = d.fixed<Address>();
         s.signature = d.bytes();
         b.commitSeals.push_back(std::move(s));
      }
      return b;
   }

   Bytes encode(const Block& block)
   {
      Encoder e;
      encode(e, block);
      return std::move(e).take();
   }
}  // namespace hybridchain::ledger
