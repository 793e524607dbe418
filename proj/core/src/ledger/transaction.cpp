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

#include "hybridchain/ledger/transaction.hpp"

namespace hybridchain::ledger
{
   namespace
   {
      constexpr std::string_view tx_domain = "hybridchain/tx/v1";

      void encode_body(Encoder& e, const Transaction& tx)
      {
         e.fixed(tx.sender).u64(tx.nonce);
         std::visit(
             [&](const auto& k) {
                using K = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<K, PublicCall>)
                   e.u8(0).str(k.contract).str(k.operation).bytes(k.args);
                else
                {
                   e.u8(1).fixed(k.groupId).fixed(k.payloadHash).boolean(k.summaryHash.has_value());
                   if (k.summaryHash)
                      e.fixed(*k.summaryHash);
                }
             },
             tx.kind);
         e.u64(tx.gasLimit).u64(tx.gasPrice);
      }
   }  // namespace

   Bytes signing_preimage(const Transaction& tx)
   {
      Encoder e;
      e.str(tx_domain);
      encode_body(e, tx);
      return std::move(e).take();
   }

   Hash compute_tx_id(const Transaction& tx) { return crypto::sha256(signing_preimage(tx)); }

   void seal(Transaction& tx, const crypto::SigningKey& key)
   {
      if (key.address() != tx.sender)
         throw std::invalid_argument("seal: key does not match sender");
      tx.txId      = compute_tx_id(tx);
      tx.signature = key.sign(tx.txId.view());
   }

   bool verify_transaction(const Transaction& tx)
   {
      if (tx.gasPrice != 0)
         return false;
      if (compute_tx_id(tx) != tx.txId)
         return false;
      return crypto::verify(tx.sender, tx.txId.view(), tx.signature);
   }

   void encode(Encoder& e, const Transaction& tx)
   {
      e.fixed(tx.txId);
      encode_body(e, tx);
      e.bytes(tx.signature);
   }

   Transaction decode_transaction(Decoder& d)
   {
      Transaction tx;
      tx.txId   = d.fixed<Hash>();
      tx.sender = d.fixed<Address>();
      tx.nonce  = d.u64();
      switch (d.u8())
      {
         case 0:
         {
            PublicCall call;
            call.contract  = d.str();
            call.operation = d.str();
            call.args      = d.bytes();
            tx.kind        = std::move(call);
            break;
         }
         case 1:
         {
            PrivacyMarker m;
            m.groupId     = d.fixed<Hash>();
            m.payloadHash = d.fixed<Hash>();
            if (d.boolean())
               m.summaryHash = d.fixed<Hash>();
            tx.kind = m;
            break;
         }
         default:
            throw DecodeError("unknown transaction kind");
      }
      tx.gasLimit  = d.u64();
      tx.gasPrice  = d.u64();
      tx.signature = d.bytes();
      return tx;
   }

   Bytes encode(const Transaction& tx)
   {
      Encoder e;
      encode(e, tx);
      return std::move(e).take();
   }
}  // namespace hybridchain::ledger
