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

#include "hybridchain/privacy/enclave.hpp"

#include <algorithm>

namespace hybridchain::privacy
{
   Enclave::Enclave(crypto::BoxKeyPair identity) : identity_(std::move(identity)) {}

   void Enclave::install_group(PrivacyGroup group, crypto::SymmetricKey key)
   {
      if (!group.has_member(public_key()))
         throw PrivacyError(PrivacyErrorCode::NotGroupMember, "enclave is not in group " + group.groupId.str());
      auto id = group.groupId;
      groups_.insert_or_assign(id, Installed{std::move(group), key});
   }

   const PrivacyGroup& Enclave::group(const Hash& groupId) const
   {
      auto it = groups_.find(groupId);
      if (it == groups_.end())
         throw PrivacyError(PrivacyErrorCode::UnknownGroup, groupId.str());
      return it->second.group;
   }

   std::vector<Hash> Enclave::group_ids() const
   {
      std::vector<Hash> out;
      for (const auto& [id, _] : groups_)
         out.push_back(id);
      return out;
   }

   EnclavePayload Enclave::seal(const Hash& groupId, ByteView plaintext, const crypto::AeadNonce& nonce) const
   {
      if (plaintext.empty())
         throw PrivacyError(PrivacyErrorCode::EmptyPayload, "private payload has no bytes");
      auto it = groups_.find(groupId);
      if (it == groups_.end())
         throw PrivacyError(PrivacyErrorCode::UnknownGroup, groupId.str());
      return EnclavePayload{groupId, nonce, crypto::aead_seal(it->second.key, nonce, plaintext, groupId.view())};
   }

   std::optional<Bytes> Enclave::open(const EnclavePayload& payload) const
   {
      auto it = groups_.find(payload.groupId);
      if (it == groups_.end())
         return std::nullopt;
      return crypto::aead_open(it->second.key, payload.nonce, payload.ciphertext, payload.groupId.view());
   }

   bool Enclave::store(EnclavePayload payload)
   {
      if (!is_member(payload.groupId))
         return false;
      auto hash = payload.payload_hash();
      payloads_.emplace(hash, std::move(payload));
      return true;
   }

   const EnclavePayload* Enclave::find(const Hash& payloadHash) const
   {
      auto it = payloads_.find(payloadHash);
      return it == payloads_.end() ? nullptr : &it->second;
   }

   KeyDelivery Enclave::deliver_key(const Hash& groupId, const crypto::BoxPublicKey& recipient,
                                    const crypto::BoxNonce& nonce) const
   {
      auto it = groups_.find(groupId);
      if (it == groups_.end())
         throw PrivacyError(PrivacyErrorCode::UnknownGroup, groupId.str());
      const auto& g = it->second.group;
      if (!g.has_member(recipient))
         throw PrivacyError(PrivacyErrorCode::NotGroupMember, "key recipient " + recipient.str());

      KeyDelivery d;
      d.groupId   = groupId;
      d.members   = g.members;
      d.parties   = g.parties;
      d.createdAt = g.createdAt;
      d.sender    = public_key();
      d.nonce     = nonce;
      d.sealedKey = identity_.seal_to(recipient, nonce, it->second.key.view());
      return d;
   }

   const PrivacyGroup& Enclave::accept_key(const KeyDelivery& delivery)
   {
      auto key = identity_.open_from(delivery.sender, delivery.nonce, delivery.sealedKey);
      if (!key || key->size() != crypto::SymmetricKey::size_bytes)
         throw PrivacyError(PrivacyErrorCode::AuthenticationFailed, "group key delivery did not open");

      PrivacyGroup g;
      g.groupId   = delivery.groupId;
      g.members   = delivery.members;
      g.parties   = delivery.parties;
      g.createdAt = delivery.createdAt;
      install_group(std::move(g), crypto::SymmetricKey::from_span(*key));
      return groups_.at(delivery.groupId).group;
   }

   std::vector<Bytes> Enclave::stored_bytes() const
   {
      std::vector<Bytes> out;
      out.emplace_back(identity_.secret_view().begin(), identity_.secret_view().end());
      for (const auto& [_, g] : groups_)
         out.emplace_back(g.key.view().begin(), g.key.view().end());
      for (const auto& [_, p] : payloads_)
         out.push_back(encode_payload(p));
      return out;
   }

   Millis DistributionPlan::component() const
   {
      Millis slowest = 0;
      for (const auto& h : hops)
         slowest = std::max(slowest, h.completion());
      return processing + slowest;
   }

   namespace
   {
      void append_u64(Bytes& out, std::uint64_t v)
      {
         for (int i = 7; i >= 0; --i)
            out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
      }
   }  // namespace

   Rng payload_rng(std::uint64_t seed, const Hash& groupId, const crypto::BoxPublicKey& sender,
                   std::uint64_t seq)
   {
      Bytes extra;
      append(extra, groupId.view());
      append(extra, sender.view());
      append_u64(extra, seq);
      return derive_rng(seed, "privacy/payload", extra);
   }

   Rng hop_rng(std::uint64_t seed, const Hash& payloadHash, const crypto::BoxPublicKey& recipient)
   {
      Bytes extra;
      append(extra, payloadHash.view());
      append(extra, recipient.view());
      return derive_rng(seed, "privacy/hop", extra);
   }

   HopPlan draw_hop(Rng& rng, const crypto::BoxPublicKey& recipient, const sim::LatencyDist& link,
                    double tamperRate)
   {
      HopPlan h;
      h.recipient      = recipient;
      h.firstHop       = link.sample(rng);
      h.tampered       = rng.bernoulli(tamperRate);
      h.refetchRequest = link.sample(rng);
      h.resend         = link.sample(rng);
      return h;
   }

   DistributionPlan plan_distribution(std::uint64_t seed, const Hash& payloadHash,
                                      std::vector<crypto::BoxPublicKey> recipients,
                                      const sim::LatencyDist& link, double tamperRate, Millis processing)
   {
      std::sort(recipients.begin(), recipients.end());
      DistributionPlan plan;
      plan.processing = processing;
      for (const auto& r : recipients)
      {
         auto rng = hop_rng(seed, payloadHash, r);
         plan.hops.push_back(draw_hop(rng, r, link, tamperRate));
      }
      return plan;
   }

   Distribution distribute_payload(const Enclave& sender, const Hash& groupId, ByteView plaintext,
                                   std::uint64_t seed, std::uint64_t seq, const sim::LatencyDist& link,
                                   double tamperRate, Millis processing)
   {
      if (!sender.is_member(groupId))
         throw PrivacyError(PrivacyErrorCode::NotGroupMember, "sender enclave is not in group " + groupId.str());
      if (plaintext.empty())
         throw PrivacyError(PrivacyErrorCode::EmptyPayload, "private payload has no bytes");

      auto rng   = payload_rng(seed, groupId, sender.public_key(), seq);
      auto nonce = rng.fill<12, crypto::AeadNonceTag>();
      std::vector<crypto::BoxPublicKey> recipients;
      for (const auto& m : sender.group(groupId).members)
         if (m != sender.public_key())
            recipients.push_back(m);

      Distribution d;
      d.payload = sender.seal(groupId, plaintext, nonce);
      d.plan    = plan_distribution(seed, d.payload.payload_hash(), recipients, link, tamperRate, processing);
      return d;
   }
}  // namespace hybridchain::privacy
