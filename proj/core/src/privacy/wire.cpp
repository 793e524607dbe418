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

#include "hybridchain/privacy/wire.hpp"

namespace hybridchain::privacy
{
   Hash EnclavePayload::payload_hash() const { return crypto::sha256(ciphertext); }

   void encode_payload(Encoder& e, const EnclavePayload& p)
   {
      e.fixed(p.groupId).fixed(p.nonce).bytes(p.ciphertext);
   }

   EnclavePayload decode_payload(Decoder& d)
   {
      EnclavePayload p;
      p.groupId    = d.fixed<Hash>();
      p.nonce      = d.fixed<crypto::AeadNonce>();
      p.ciphertext = d.bytes();
      return p;
   }

   Bytes encode_payload(const EnclavePayload& p)
   {
      Encoder e;
      encode_payload(e, p);
      return std::move(e).take();
   }

   EnclavePayload decode_payload(ByteView bytes)
   {
      Decoder d(bytes);
      auto    p = decode_payload(d);
      d.expect_done();
      return p;
   }

   Bytes encode(const PrivateCall& call)
   {
      Encoder e;
      e.str("hybridchain/private-call/v1").fixed(call.sender).str(call.operation).bytes(call.args);
      return std::move(e).take();
   }

   PrivateCall decode_private_call(ByteView bytes)
   {
      Decoder d(bytes);
      if (d.str() != "hybridchain/private-call/v1")
         throw DecodeError("not a private call");
      PrivateCall call;
      call.sender    = d.fixed<Address>();
      call.operation = d.str();
      call.args      = d.bytes();
      d.expect_done();
      return call;
   }

   Bytes encode(const EnclaveMessage& msg)
   {
      Encoder e;
      e.u8(static_cast<std::uint8_t>(msg.index()));
      std::visit(
          [&](const auto& m) {
             using M = std::decay_t<decltype(m)>;
             if constexpr (std::is_same_v<M, PayloadPush>)
             {
                encode_payload(e, m.payload);
                e.fixed(m.payloadHash);
             }
             else if constexpr (std::is_same_v<M, PayloadAck> || std::is_same_v<M, PayloadRefetch>)
                e.fixed(m.groupId).fixed(m.payloadHash);
             else if constexpr (std::is_same_v<M, KeyDelivery>)
             {
                e.fixed(m.groupId).u32(static_cast<std::uint32_t>(m.members.size()));
                for (const auto& k : m.members)
                   e.fixed(k);
                e.u32(static_cast<std::uint32_t>(m.parties.size()));
                for (const auto& a : m.parties)
                   e.fixed(a);
                e.i64(m.createdAt).fixed(m.sender).fixed(m.nonce).bytes(m.sealedKey);
             }
             else
                e.fixed(m.groupId);
          },
          msg);
      return std::move(e).take();
   }

   EnclaveMessage decode_enclave_message(ByteView bytes)
   {
      Decoder        d(bytes);
      EnclaveMessage out;
      switch (d.u8())
      {
         case 0:
         {
            PayloadPush p;
            p.payload     = decode_payload(d);
            p.payloadHash = d.fixed<Hash>();
            out           = std::move(p);
            break;
         }
         case 1:
         {
            PayloadAck a;
            a.groupId     = d.fixed<Hash>();
            a.payloadHash = d.fixed<Hash>();
            out           = a;
            break;
         }
         case 2:
         {
            PayloadRefetch r;
            r.groupId     = d.fixed<Hash>();
            r.payloadHash = d.fixed<Hash>();
            out           = r;
            break;
         }
         case 3:
         {
            KeyDelivery k;
            k.groupId = d.fixed<Hash>();
            auto nm   = d.u32();
            if (static_cast<std::uint64_t>(nm) * 32 > d.remaining())
               throw DecodeError("member count exceeds input");
            for (std::uint32_t i = 0; i < nm; ++i)
               k.members.push_back(d.fixed<crypto::BoxPublicKey>());
            auto np = d.u32();
            if (static_cast<std::uint64_t>(np) * 20 > d.remaining())
               throw DecodeError("party count exceeds input");
            for (std::uint32_t i = 0; i < np; ++i)
               k.parties.push_back(d.fixed<Address>());
            k.createdAt = d.i64();
            k.sender    = d.fixed<crypto::BoxPublicKey>();
            k.nonce     = d.fixed<crypto::BoxNonce>();
            k.sealedKey = d.bytes();
            out         = std::move(k);
            break;
         }
         case 4:
            out = KeyAck{d.fixed<Hash>()};
            break;
         default:
            throw DecodeError("unknown enclave message");
      }
      d.expect_done();
      return out;
   }

   std::string describe(const EnclaveMessage& msg)
   {
      return std::visit(
          [](const auto& m) -> std::string {
             using M = std::decay_t<decltype(m)>;
             if constexpr (std::is_same_v<M, PayloadPush>)
                return "payload group=" + m.payload.groupId.str().substr(0, 18) +
                       " bytes=" + std::to_string(m.payload.ciphertext.size());
             else if constexpr (std::is_same_v<M, PayloadAck>)
                return "ack payload=" + m.payloadHash.str().substr(0, 18);
             else if constexpr (std::is_same_v<M, PayloadRefetch>)
                return "refetch payload=" + m.payloadHash.str().substr(0, 18);
             else if constexpr (std::is_same_v<M, KeyDelivery>)
                return "group-key group=" + m.groupId.str().substr(0, 18);
             else
                return "group-key-ack group=" + m.groupId.str().substr(0, 18);
          },
          msg);
   }
}  // namespace hybridchain::privacy
