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

#include "hybridchain/contracts/group_state.hpp"

#include <algorithm>

namespace hybridchain::contracts
{
   GroupState::GroupState(Hash groupId, std::vector<Address> parties)
       : groupId_(groupId), parties_(std::move(parties))
   {
      std::sort(parties_.begin(), parties_.end());
      parties_.erase(std::unique(parties_.begin(), parties_.end()), parties_.end());
   }

   bool GroupState::is_party(const Address& a) const
   {
      return std::binary_search(parties_.begin(), parties_.end(), a);
   }

   void GroupState::require_party(const Address& a) const
   {
      if (!is_party(a))
         throw ContractError(ContractErrorCode::NotGroupMember, a.str());
   }

   void GroupState::deploy_register_breach(const Address& deployer)
   {
      require_party(deployer);
      if (deployed_)
         throw ContractError(ContractErrorCode::AlreadyDeployed, groupId_.str());
      deployed_ = true;
   }

   std::uint64_t GroupState::register_breach(const Address& reporter, const BreachArgs& args)
   {
      require_party(reporter);
      if (!deployed_)
         throw ContractError(ContractErrorCode::NotDeployed, groupId_.str());
      std::uint64_t id = breaches_.size();
      breaches_.push_back(
          {id, reporter, args.slaTermsHash, args.detailsHash, args.severity, args.reportedAt});
      return id;
   }

   std::vector<std::uint64_t> GroupState::commit_breach_batch(const Address& caller,
                                                              const BatchArgs& batch)
   {
      require_party(caller);
      if (batch.entries.empty())
         throw ContractError(ContractErrorCode::EmptyBatch, groupId_.str());
      if (!deployed_)
         throw ContractError(ContractErrorCode::NotDeployed, groupId_.str());
      std::vector<std::uint64_t> ids;
      for (const auto& entry : batch.entries)
         ids.push_back(register_breach(caller, entry));
      return ids;
   }

   const std::vector<BreachRecord>& GroupState::view_breaches(const Address& caller) const
   {
      require_party(caller);
      return breaches_;
   }

   Bytes GroupState::encode() const
   {
      Encoder e;
      e.fixed(groupId_).u32(static_cast<std::uint32_t>(parties_.size()));
      for (const auto& p : parties_)
         e.fixed(p);
      e.boolean(deployed_).u64(executed_).u32(static_cast<std::uint32_t>(breaches_.size()));
      for (const auto& b : breaches_)
         contracts::encode(e, b);
      return std::move(e).take();
   }
}  // namespace hybridchain::contracts
