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

#include "hybridchain/bytes.hpp"
#include "hybridchain/crypto.hpp"
#include "hybridchain/encoding.hpp"

#include <optional>
#include <string>
#include <variant>

namespace hybridchain::ledger
{
   struct PublicCall
   {
      std::string contract;
      std::string operation;
      Bytes       args;

      friend bool operator==(const PublicCall&, const PublicCall&) = default;
   };

   /// Public anchor of a private transaction. Never carries payload bytes.
   /// `summaryHash` is set only for breach batches, where it commits to the
   /// canonical encoding of the batch.
   struct PrivacyMarker
   {
      Hash                groupId;
      Hash                payloadHash;
      std::optional<Hash> summaryHash;

      friend bool operator==(const PrivacyMarker&, const PrivacyMarker&) = default;
   };

   using TxKind = std::variant<PublicCall, PrivacyMarker>;

   struct Transaction
   {
      Hash          txId;
      Address       sender;
      std::uint64_t nonce = 0;
      TxKind        kind;
      std::uint64_t gasLimit = 0;
      std::uint64_t gasPrice = 0;
      Bytes         signature;

      bool                 is_marker() const { return std::holds_alternative<PrivacyMarker>(kind); }
      const PublicCall*    call() const { return std::get_if<PublicCall>(&kind); }
      const PrivacyMarker* marker() const { return std::get_if<PrivacyMarker>(&kind); }

      friend bool operator==(const Transaction&, const Transaction&) = default;
   };

   /// Everything except txId and signature.
   Bytes signing_preimage(const Transaction& tx);
   Hash  compute_tx_id(const Transaction& tx);

   /// Fills txId and signature. The key must belong to tx.sender.
   void seal(Transaction& tx, const crypto::SigningKey& key);

   /// txId matches the preimage, gas price is zero and the signature verifies
   /// against the sender address.
   bool verify_transaction(const Transaction& tx);

   void        encode(Encoder& e, const Transaction& tx);
   Transaction decode_transaction(Decoder& d);
   Bytes       encode(const Transaction& tx);
}  // namespace hybridchain::ledger
