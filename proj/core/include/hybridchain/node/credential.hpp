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

#include "hybridchain/contracts/records.hpp"
#include "hybridchain/ledger/transaction.hpp"
#include "hybridchain/node/errors.hpp"

#include <map>
#include <optional>
#include <vector>

namespace hybridchain::node
{
   /// A domain identity held by a node: signing key, derived address and the
   /// role it registered with.
   struct Credential
   {
      crypto::SigningKey             key;
      Address                        address;
      std::optional<contracts::Role> boundRole;
   };

   Credential make_credential(const crypto::Seed& seed);

   /// Fills txId and signature. Throws KeyMismatch when the credential does
   /// not belong to tx.sender.
   ledger::Transaction sign_transaction(const Credential& credential, ledger::Transaction tx);

   /// Keys of the domains hosted on one node. Nothing outside this class
   /// signs on their behalf.
   class CredentialManager
   {
     public:
      const Address& add(const crypto::Seed& seed);

      bool              holds(const Address& a) const { return creds_.contains(a); }
      /// Throws UnknownCredential.
      const Credential& get(const Address& a) const;
      std::vector<Address> addresses() const;

      /// Binds once; binding again throws RoleAlreadyBound.
      void bind_role(const Address& a, contracts::Role role);

      /// Next nonce to use for `a`: the on-chain nonce, or one past the last
      /// nonce handed out if that is higher.
      std::uint64_t allocate_nonce(const Address& a, std::uint64_t chainNonce);

      /// Throws UnknownCredential or KeyMismatch.
      ledger::Transaction sign_transaction(ledger::Transaction tx) const;

     private:
      std::map<Address, Credential>    creds_;
      std::map<Address, std::uint64_t> nextNonce_;
   };
}  // namespace hybridchain::node
