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

#include "hybridchain/privacy/privacy_group.hpp"
#include "hybridchain/privacy/wire.hpp"
#include "hybridchain/rng.hpp"
#include "hybridchain/sim/latency.hpp"

#include <map>
#include <optional>
#include <vector>

namespace hybridchain::privacy
{
   /// Per-node private transaction manager: holds the enclave identity, the
   /// keys of the groups this node belongs to, and the encrypted payloads it
   /// has received. It never holds state for groups it is not a member of.
   class Enclave
   {
     public:
      explicit Enclave(crypto::BoxKeyPair identity);

      const crypto::BoxPublicKey& public_key() const { return identity_.public_key(); }
      const crypto::BoxKeyPair&   identity() const { return identity_; }

      /// Throws NotGroupMember when this enclave is not one of the members.
      void install_group(PrivacyGroup group, crypto::SymmetricKey key);

      bool                is_member(const Hash& groupId) const { return groups_.contains(groupId); }
      /// Throws UnknownGroup.
      const PrivacyGroup& group(const Hash& groupId) const;
      std::vector<Hash>   group_ids() const;

      /// AEAD under the group key with the group id as associated data.
      /// Throws EmptyPayload or UnknownGroup.
      EnclavePayload       seal(const Hash& groupId, ByteView plaintext, const crypto::AeadNonce& nonce) const;
      /// Empty when this enclave lacks the group or authentication fails.
      std::optional<Bytes> open(const EnclavePayload& payload) const;

      /// Keeps a payload of a group this enclave belongs to; returns false for
      /// anything else.
      bool                  store(EnclavePayload payload);
      const EnclavePayload* find(const Hash& payloadHash) const;
      std::size_t           stored_count() const { return payloads_.size(); }

      /// Group key sealed to another member's identity.
      KeyDelivery deliver_key(const Hash& groupId, const crypto::BoxPublicKey& recipient,
                              const crypto::BoxNonce& nonce) const;
      /// Opens a delivery addressed to this enclave and installs the group.
      /// Throws AuthenticationFailed or NotGroupMember.
      const PrivacyGroup& accept_key(const KeyDelivery& delivery);

      /// Every byte string this enclave keeps: identity secret, group keys and
      /// stored payload encodings. Used by isolation scans.
      std::vector<Bytes> stored_bytes() const;

     private:
      struct Installed
      {
         PrivacyGroup         group;
         crypto::SymmetricKey key;
      };

      crypto::BoxKeyPair              identity_;
      std::map<Hash, Installed>       groups_;
      std::map<Hash, EnclavePayload>  payloads_;
   };

   /// Pre-drawn delays for one receiving member. A tampered first delivery
   /// fails authentication, so the receiver asks for the payload again.
   struct HopPlan
   {
      crypto::BoxPublicKey recipient;
      Millis               firstHop       = 0;
      bool                 tampered       = false;
      Millis               refetchRequest = 0;
      Millis               resend         = 0;

      /// Time from send to the receiver holding an authentic copy.
      Millis completion() const { return firstHop + (tampered ? refetchRequest + resend : 0); }
   };

   struct DistributionPlan
   {
      Millis               processing = 0;
      std::vector<HopPlan> hops;

      /// Processing plus the slowest member's completion (acks travel with no
      /// extra delay). This is the enclave component of private latency.
      Millis component() const;
   };

   /// Stream for the sender's payload number `seq` in a group. The payload
   /// nonce is its first draw.
   Rng payload_rng(std::uint64_t seed, const Hash& groupId, const crypto::BoxPublicKey& sender,
                   std::uint64_t seq);

   /// Stream for one hop of one payload: first hop delay, tamper flag,
   /// refetch request delay and resend delay, in that order. Sender and
   /// receiver both derive it, so each side reads the delays of the messages
   /// it sends without the plan travelling on the wire.
   Rng hop_rng(std::uint64_t seed, const Hash& payloadHash, const crypto::BoxPublicKey& recipient);

   HopPlan draw_hop(Rng& rng, const crypto::BoxPublicKey& recipient, const sim::LatencyDist& link,
                    double tamperRate);

   /// Four values per recipient, recipients taken in sorted order, each from
   /// its own hop stream.
   DistributionPlan plan_distribution(std::uint64_t seed, const Hash& payloadHash,
                                      std::vector<crypto::BoxPublicKey> recipients,
                                      const sim::LatencyDist& link, double tamperRate,
                                      Millis processing);

   struct Distribution
   {
      EnclavePayload   payload;
      DistributionPlan plan;
   };

   /// Encrypts `plaintext` for the group and plans its delivery to every other
   /// member. Throws NotGroupMember, EmptyPayload.
   Distribution distribute_payload(const Enclave& sender, const Hash& groupId, ByteView plaintext,
                                   std::uint64_t seed, std::uint64_t seq, const sim::LatencyDist& link,
                                   double tamperRate, Millis processing);
}  // namespace hybridchain::privacy
