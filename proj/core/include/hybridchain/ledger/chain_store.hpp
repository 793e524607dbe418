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

#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hybridchain::ledger
{
   enum class ChainErrorCode
   {
      HeightGap,
      InsufficientSeals,
      UnknownValidatorSeal,
      InvalidSeal,
      ParentMismatch,
      DuplicateHeight,
   };

   std::string_view to_string(ChainErrorCode code);

   struct ChainError : std::runtime_error
   {
      ChainError(ChainErrorCode c, const std::string& what)
          : std::runtime_error(std::string(to_string(c)) + ": " + what), code(c)
      {
      }
      ChainErrorCode code;
   };

   struct TxLocation
   {
      std::uint64_t height   = 0;
      std::size_t   position = 0;
   };

   /// Append-only finalized chain. There is no path that replaces a block.
   class ChainStore
   {
     public:
      explicit ChainStore(Block genesis);

      /// Throws ChainError. A block at an already-finalized height always fails
      /// with DuplicateHeight, whether or not it matches the stored block.
      void append_block(Block block, const consensus::ValidatorSet& validators);

      std::uint64_t             head_height() const { return blocks_.size() - 1; }
      const Block&              head() const { return blocks_.back(); }
      const Hash&               head_hash() const { return hashes_.back(); }
      const Block&              at(std::uint64_t height) const { return blocks_.at(height); }
      const Hash&               hash_at(std::uint64_t height) const { return hashes_.at(height); }
      std::optional<TxLocation> find_tx(const Hash& txId) const;
      const std::vector<Block>& blocks() const { return blocks_; }

     private:
      std::vector<Block>         blocks_;
      std::vector<Hash>          hashes_;
      std::map<Hash, TxLocation> txIndex_;
   };

   /// Verifies the seals against `blockHash`; returns the first failure, if any.
   std::optional<ChainError> check_seals(const Block& block, const Hash& blockHash,
                                         const consensus::ValidatorSet& validators);

   /// One line per block: height, hash, parent, proposer, round, tx count, gas.
   void write_chain_dump(std::ostream& out, const ChainStore& chain);
}  // namespace hybridchain::ledger
