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

#include "hybridchain/contracts/abi.hpp"
#include "hybridchain/contracts/records.hpp"
#include "hybridchain/ledger/transaction.hpp"

#include <map>
#include <optional>
#include <vector>

namespace hybridchain::contracts
{
   /// Emitted by select_service; the privacy manager forms a group for the pair.
   struct PrivacyGroupRequested
   {
      std::uint64_t selectionId = 0;
      Address       consumer;
      Address       provider;
   };

   /// Outcome of executing one finalized public transaction. A failing call
   /// still consumes its nonce and gas, and leaves contract state untouched.
   struct TxResult
   {
      std::optional<ContractErrorCode>     error;
      std::optional<std::uint64_t>         createdId;  // serviceId or selectionId
      std::optional<PrivacyGroupRequested> groupRequest;

      bool ok() const { return !error; }
   };

   /// Global contract state of the three public contracts plus account nonces.
   /// Every operation checks the caller's role before touching state.
   class PublicState
   {
     public:
      void register_domain(const Address& caller, Role role, Millis now);
      std::uint64_t publish_service(const Address& caller, const PublishArgs& args);
      PrivacyGroupRequested select_service(const Address& caller, std::uint64_t serviceId, Millis now);

      const DomainRecord*  domain(const Address& a) const;
      const ServiceRecord* service(std::uint64_t id) const;
      std::size_t          live_service_count(const Address& provider) const;

      const std::vector<DomainRecord>&    domains() const { return domains_; }
      const std::vector<ServiceRecord>&   services() const { return services_; }
      const std::vector<SelectionRecord>& selections() const { return selections_; }

      std::uint64_t next_nonce(const Address& a) const;

      /// Applies a verified, finalized transaction at the block's timestamp.
      TxResult apply(const ledger::Transaction& tx, Millis blockTime, const Abi& abi = Abi::builtin());

      /// Canonical encoding of the full state, for cross-node comparison.
      Bytes encode() const;

     private:
      std::vector<DomainRecord>                  domains_;
      std::map<Address, std::size_t>             domainIndex_;
      std::vector<ServiceRecord>                 services_;
      std::map<Address, std::size_t>             serviceCounts_;
      std::vector<SelectionRecord>               selections_;
      std::map<Address, std::uint64_t>           nonces_;
   };
}  // namespace hybridchain::contracts
