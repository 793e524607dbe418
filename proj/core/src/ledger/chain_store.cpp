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

#include "hybridchain/ledger/chain_store.hpp"

#include <set>

namespace hybridchain::ledger
{
   std::string_view to_string(ChainErrorCode code)
   {
      switch (code)
      {
         case ChainErrorCode::HeightGap:
            return "HeightGap";
         case ChainErrorCode::InsufficientSeals:
            return "InsufficientSeals";
         case ChainErrorCode::UnknownValidatorSeal:
            return "UnknownValidatorSeal";
         case ChainErrorCode::InvalidSeal:
            return "InvalidSeal";
         case ChainErrorCode::ParentMismatch:
            return "ParentMismatch";
         case ChainErrorCode::DuplicateHeight:
            return "DuplicateHeight";
      }
      return "ChainError";
   }

   ChainStore::ChainStore(Block genesis)
   {
      if (genesis.height != 0 || !genesis.parentHash.is_zero())
         throw std::invalid_argument("genesis must have height 0 and a zero parent hash");
      hashes_.push_back(hash_block(genesis));
      blocks_.push_back(std::move(genesis));
   }

   std::optional<ChainError> check_seals(const Block& block, const Hash& blockHash,
                                         const consensus::ValidatorSet& validators)
   {
      std::set<Address> distinct;
      for (const auto& seal : block.commitSeals)
      {
         if (!validators.contains(seal.validator))
            return ChainError(ChainErrorCode::UnknownValidatorSeal, seal.validator.str());
         if (!verify_commit_seal(blockHash, seal))
            return ChainError(ChainErrorCode::InvalidSeal, seal.validator.str());
         distinct.insert(seal.validator);
      }
      if (distinct.size() < validators.quorum())
         return ChainError(ChainErrorCode::InsufficientSeals,
                           std::to_string(distinct.size()) + " of " +
                               std::to_string(validators.quorum()) + " required");
      return std::nullopt;
   }

   void ChainStore::append_block(Block block, const consensus::ValidatorSet& validators)
   {
      if (block.height <= head_height())
         throw ChainError(ChainErrorCode::DuplicateHeight,
                          "height " + std::to_string(block.height) + " already finalized");
      if (block.height != head_height() + 1)
         throw ChainError(ChainErrorCode::HeightGap, "expected height " +
                                                         std::to_string(head_height() + 1) +
                                                         ", got " + std::to_string(block.height));
      if (block.parentHash != head_hash())
         throw ChainError(ChainErrorCode::ParentMismatch, "parent " + block.parentHash.str());

      auto hash = hash_block(block);
      if (auto err = check_seals(block, hash, validators))
         throw *err;

      for (std::size_t i = 0; i < block.transactions.size(); ++i)
         txIndex_[block.transactions[i].txId] = {block.height, i};
      hashes_.push_back(hash);
      blocks_.push_back(std::move(block));
   }

   std::optional<TxLocation> ChainStore::find_tx(const Hash& txId) const
   {
      auto it = txIndex_.find(txId);
      if (it == txIndex_.end())
         return std::nullopt;
      return it->second;
   }

   void write_chain_dump(std::ostream& out, const ChainStore& chain)
   {
      for (std::uint64_t h = 0; h <= chain.head_height(); ++h)
      {
         const auto& b = chain.at(h);
         out << "height=" << b.height << " hash=" << chain.hash_at(h).str()
             << " parent=" << b.parentHash.str() << " proposer=" << b.proposer.str()
             << " round=" << b.round << " txs=" << b.transactions.size() << " gas=" << b.gasUsed
             << '\n';
      }
   }
}  // namespace hybridchain::ledger
