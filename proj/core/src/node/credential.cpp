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

#include "hybridchain/node/credential.hpp"

#include <algorithm>

namespace hybridchain::node
{
   std::string_view to_string(NodeErrorCode code)
   {
      switch (code)
      {
         case NodeErrorCode::KeyMismatch:
            return "KeyMismatch";
         case NodeErrorCode::UnknownCredential:
            return "UnknownCredential";
         case NodeErrorCode::RoleAlreadyBound:
            return "RoleAlreadyBound";
         case NodeErrorCode::MalformedRequest:
            return "MalformedRequest";
         case NodeErrorCode::RoleViolation:
            return "RoleViolation";
         case NodeErrorCode::UnknownGroup:
            return "UnknownGroup";
         case NodeErrorCode::UnknownMethod:
            return "UnknownMethod";
         case NodeErrorCode::NotGroupMember:
            return "NotGroupMember";
         case NodeErrorCode::VisibilityViolation:
            return "VisibilityViolation";
      }
      return "NodeError";
   }

   Credential make_credential(const crypto::Seed& seed)
   {
      auto key = crypto::SigningKey::from_seed(seed);
      auto a   = key.address();
      return Credential{std::move(key), a, std::nullopt};
   }

   ledger::Transaction sign_transaction(const Credential& credential, ledger::Transaction tx)
   {
      if (credential.address != tx.sender)
         throw NodeError(NodeErrorCode::KeyMismatch,
                         "credential " + credential.address.str() + " cannot sign for " + tx.sender.str());
      ledger::seal(tx, credential.key);
      return tx;
   }

   const Address& CredentialManager::add(const crypto::Seed& seed)
   {
      auto c  = make_credential(seed);
      auto a  = c.address;
      auto it = creds_.insert_or_assign(a, std::move(c)).first;
      return it->first;
   }

   const Credential& CredentialManager::get(const Address& a) const
   {
      auto it = creds_.find(a);
      if (it == creds_.end())
         throw NodeError(NodeErrorCode::UnknownCredential, a.str());
      return it->second;
   }

   std::vector<Address> CredentialManager::addresses() const
   {
      std::vector<Address> out;
      for (const auto& [a, _] : creds_)
         out.push_back(a);
      return out;
   }

   void CredentialManager::bind_role(const Address& a, contracts::Role role)
   {
      auto it = creds_.find(a);
      if (it == creds_.end())
         throw NodeError(NodeErrorCode::UnknownCredential, a.str());
      if (it->second.boundRole)
         throw NodeError(NodeErrorCode::RoleAlreadyBound, a.str());
      it->second.boundRole = role;
   }

   std::uint64_t CredentialManager::allocate_nonce(const Address& a, std::uint64_t chainNonce)
   {
      auto& next = nextNonce_[a];
      auto  n    = std::max(next, chainNonce);
      next       = n + 1;
      return n;
   }

   ledger::Transaction CredentialManager::sign_transaction(ledger::Transaction tx) const
   {
      auto it = creds_.find(tx.sender);
      if (it == creds_.end())
         throw NodeError(NodeErrorCode::KeyMismatch, "no key held for " + tx.sender.str());
      return node::sign_transaction(it->second, std::move(tx));
   }
}  // namespace hybridchain::node
