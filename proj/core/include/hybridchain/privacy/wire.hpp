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
#include "hybridchain/encoding.hpp"

#include <string>
#include <variant>
#include <vector>

namespace hybridchain::privacy
{
   /// Encrypted private transaction as stored and exchanged by enclaves.
   struct EnclavePayload
   {
      Hash              groupId;
      crypto::AeadNonce nonce;
      Bytes             ciphertext;

      /// SHA-256 of the ciphertext; this is what a privacy marker commits to.
      Hash payload_hash() const;

      friend bool operator==(const EnclavePayload&, const EnclavePayload&) = default;
   };

   /// groupId (32) || nonce (12) || u32 big-endian length || ciphertext.
   Bytes          encode_payload(const EnclavePayload& p);
   EnclavePayload decode_payload(ByteView bytes);
   void           encode_payload(Encoder& e, const EnclavePayload& p);
   EnclavePayload decode_payload(Decoder& d);

   /// Plaintext of a private transaction.
   struct PrivateCall
   {
      Address     sender;
      std::string operation;
      Bytes       args;

      friend bool operator==(const PrivateCall&, const PrivateCall&) = default;
   };

   Bytes       encode(const PrivateCall& call);
   PrivateCall decode_private_call(ByteView bytes);

   /// `payloadHash` is the sender's declared hash; a copy whose ciphertext
   /// does not hash to it, or does not authenticate, is refetched by that hash.
   struct PayloadPush
   {
      EnclavePayload payload;
      Hash           payloadHash;
   };

   struct PayloadAck
   {
      Hash groupId;
      Hash payloadHash;
   };

   /// Sent by a receiver whose copy failed authentication.
   struct PayloadRefetch
   {
      Hash groupId;
      Hash payloadHash;
   };

   /// Group key sealed to one member's enclave identity.
   struct KeyDelivery
   {
      Hash                              groupId;
      std::vector<crypto::BoxPublicKey> members;
      std::vector<Address>              parties;
      Millis                            createdAt = 0;
      crypto::BoxPublicKey              sender;
      crypto::BoxNonce                  nonce;
      Bytes                             sealedKey;
   };

   struct KeyAck
   {
      Hash groupId;
   };

   using EnclaveMessage = std::variant<PayloadPush, PayloadAck, PayloadRefetch, KeyDelivery, KeyAck>;

   Bytes          encode(const EnclaveMessage& msg);
   EnclaveMessage decode_enclave_message(ByteView bytes);
   std::string    describe(const EnclaveMessage& msg);
}  // namespace hybridchain::privacy
