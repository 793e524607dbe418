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

#include "hybridchain/privacy/privacy_group.hpp"

#include "hybridchain/rng.hpp"

#include <algorithm>

namespace hybridchain::privacy
{
   std::string_view to_string(PrivacyErrorCode code)
   {
      switch (code)
      {
         case PrivacyErrorCode::TooFewMembers:
            return "TooFewMembers";
         case PrivacyErrorCode::UnknownMember:
            return "UnknownMember";
         case PrivacyErrorCode::NotGroupMember:
            return "NotGroupMember";
         case PrivacyErrorCode::EmptyPayload:
            return "EmptyPayload";
         case PrivacyErrorCode::UnknownGroup:
            return "UnknownGroup";
         case PrivacyErrorCode::PayloadNeverArrives:
            return "PayloadNeverArrives";
         case PrivacyErrorCode::AuthenticationFailed:
            return "AuthenticationFailed";
      }
      return "PrivacyError";
   }

   bool PrivacyGroup::has_member(const crypto::BoxPublicKey& key) const
   {
      return std::binary_search(members.begin(), members.end(), key);
   }

   bool PrivacyGroup::has_party(const Address& a) const
   {
      return std::binary_search(parties.begin(), parties.end(), a);
   }

   Hash derive_group_id(std::vector<crypto::BoxPublicKey> members, ByteView salt)
   {
      std::sort(members.begin(), members.end());
      crypto::Sha256 h;
      h.update(as_bytes("hybridchain/privacy-group/v1"));
      for (const auto& m : members)
         h.update(m.view());
      h.update(salt);
      return h.finish();
   }

   Bytes pair_salt(const Address& consumer, const Address& provider)
   {
      Bytes salt;
      append(salt, consumer.view());
      append(salt, provider.view());
      return salt;
   }

   PrivacyGroup create_privacy_group(std::vector<crypto::BoxPublicKey> members, ByteView salt,
                                     std::vector<Address> parties, Millis createdAt,
                                     const MemberCheck& known)
   {
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      if (members.size() < 2)
         throw PrivacyError(PrivacyErrorCode::TooFewMembers,
                            std::to_string(members.size()) + " distinct member(s)");
      if (known)
         for (const auto& m : members)
            if (!known(m))
               throw PrivacyError(PrivacyErrorCode::UnknownMember, m.str());
      std::sort(parties.begin(), parties.end());
      parties.erase(std::unique(parties.begin(), parties.end()), parties.end());

      PrivacyGroup g;
      g.groupId   = derive_group_id(members, salt);
      g.members   = std::move(members);
      g.parties   = std::move(parties);
      g.createdAt = createdAt;
      return g;
   }

   crypto::SymmetricKey derive_group_key(std::uint64_t seed, const Hash& groupId)
   {
      auto rng = derive_rng(seed, "privacy/group-key", groupId.view());
      return rng.fill<32, crypto::SymmetricKeyTag>();
   }
}  // namespace hybridchain::privacy
