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

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hybridchain::privacy
{
   enum class PrivacyErrorCode
   {
      TooFewMembers,
      UnknownMember,
      NotGroupMember,
      EmptyPayload,
      UnknownGroup,
      PayloadNeverArrives,
      AuthenticationFailed,
   };

   std::string_view to_string(PrivacyErrorCode code);

   struct PrivacyError : std::runtime_error
   {
      PrivacyError(PrivacyErrorCode c, const std::string& what)
          : std::runtime_error(std::string(to_string(c)) + ": " + what), code(c)
      {
      }
      PrivacyErrorCode code;
   };

   /// Members are enclave identities; parties are the domain addresses whose
   /// agreement the group serves. The group key is held only by member enclaves.
   struct PrivacyGroup
   {
      Hash                              groupId;
      std::vector<crypto::BoxPublicKey> members;  // sorted
      std::vector<Address>              parties;  // sorted
      Millis                            createdAt = 0;

      bool has_member(const crypto::BoxPublicKey& key) const;
      bool has_party(const Address& a) const;

      friend bool operator==(const PrivacyGroup&, const PrivacyGroup&) = default;
   };

   /// SHA-256 over the sorted member keys followed by the salt.
   Hash derive_group_id(std::vector<crypto::BoxPublicKey> members, ByteView salt);

   /// Salt for the group serving a (consumer, provider) agreement.
   Bytes pair_salt(const Address& consumer, const Address& provider);

   using MemberCheck = std::function<bool(const crypto::BoxPublicKey&)>;

   /// Throws TooFewMembers (fewer than two distinct members) or UnknownMember
   /// (a member not accepted by `known`).
   PrivacyGroup create_privacy_group(std::vector<crypto::BoxPublicKey> members, ByteView salt,
                                     std::vector<Address> parties, Millis createdAt,
                                     const MemberCheck& known = {});

   /// Group key drawn from a stream keyed by the run seed and the group id.
   crypto::SymmetricKey derive_group_key(std::uint64_t seed, const Hash& groupId);
}  // namespace hybridchain::privacy
