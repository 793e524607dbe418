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
#include "hybridchain/node/errors.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hybridchain::node
{
   /// Public contracts live at an address; private ones are bound to a group.
   struct DeploymentRecord
   {
      std::string           contract;
      std::uint64_t         version    = 0;
      contracts::Visibility visibility = contracts::Visibility::Public;
      std::optional<Address> address;
      std::optional<Hash>    groupId;

      friend bool operator==(const DeploymentRecord&, const DeploymentRecord&) = default;
   };

   /// Deployment, versioning and public/private routing of the contracts in
   /// the ABI.
   class ContractManager
   {
     public:
      explicit ContractManager(const contracts::Abi& abi = contracts::Abi::builtin());

      /// Deploys every public contract of the ABI at version 1.
      void deploy_genesis();

      /// Throws UnknownMethod for a contract not in the ABI and
      /// VisibilityViolation when the visibility, or the presence of a group,
      /// does not match the ABI. Redeploying into the same scope bumps the version.
      const DeploymentRecord& deploy(const std::string& contract, contracts::Visibility visibility,
                                     std::optional<Hash> groupId = std::nullopt);

      /// Latest deployment of a contract in a scope (no group means public).
      const DeploymentRecord* find(std::string_view contract,
                                   const std::optional<Hash>& groupId = std::nullopt) const;

      const std::vector<DeploymentRecord>& records() const { return records_; }
      const contracts::Abi&                abi() const { return abi_; }

     private:
      const contracts::Abi&         abi_;
      std::vector<DeploymentRecord> records_;
   };

   /// Last 20 bytes of SHA-256("hybridchain/contract/v1" || name || version).
   Address contract_address(std::string_view contract, std::uint64_t version);
}  // namespace hybridchain::node
