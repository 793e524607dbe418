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

#include "hybridchain/node/contract_manager.hpp"

#include "hybridchain/crypto.hpp"
#include "hybridchain/encoding.hpp"

#include <algorithm>

namespace hybridchain::node
{
   Address contract_address(std::string_view contract, std::uint64_t version)
   {
      Encoder e;
      e.str("hybridchain/contract/v1").str(contract).u64(version);
      auto h = crypto::sha256(e.data());
      return Address::from_span(h.view().subspan(Hash::size_bytes - Address::size_bytes));
   }

   ContractManager::ContractManager(const contracts::Abi& abi) : abi_(abi) {}

   void ContractManager::deploy_genesis()
   {
      for (const auto& c : abi_.contracts(contracts::Visibility::Public))
         deploy(c, contracts::Visibility::Public);
   }

   const DeploymentRecord& ContractManager::deploy(const std::string& contract, contracts::Visibility visibility,
                                                   std::optional<Hash> groupId)
   {
      auto publicNames  = abi_.contracts(contracts::Visibility::Public);
      auto privateNames = abi_.contracts(contracts::Visibility::Private);
      bool isPublic     = std::find(publicNames.begin(), publicNames.end(), contract) != publicNames.end();
      bool isPrivate    = std::find(privateNames.begin(), privateNames.end(), contract) != privateNames.end();
      if (!isPublic && !isPrivate)
         throw NodeError(NodeErrorCode::UnknownMethod, "no contract named " + contract);
      if ((visibility == contracts::Visibility::Public) != isPublic)
         throw NodeError(NodeErrorCode::VisibilityViolation,
                         contract + (isPublic ? " is a public contract" : " deploys only into a privacy group"));
      if ((visibility == contracts::Visibility::Private) != groupId.has_value())
         throw NodeError(NodeErrorCode::VisibilityViolation,
                         contract + (groupId ? ": public deployment given a group" : ": private deployment needs a group"));

      const auto*      prev = find(contract, groupId);
      DeploymentRecord r;
      r.contract   = contract;
      r.version    = prev ? prev->version + 1 : 1;
      r.visibility = visibility;
      r.groupId    = groupId;
      if (!groupId)
         r.address = contract_address(contract, r.version);
      records_.push_back(std::move(r));
      return records_.back();
   }

   const DeploymentRecord* ContractManager::find(std::string_view contract, const std::optional<Hash>& groupId) const
   {
      for (auto it = records_.rbegin(); it != records_.rend(); ++it)
         if (it->contract == contract && it->groupId == groupId)
            return &*it;
      return nullptr;
   }
}  // namespace hybridchain::node
