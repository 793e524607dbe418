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

#include <vector>

namespace hybridchain::contracts
{
   /// RegisterBreach contract state inside one privacy group. `parties` are
   /// the domain addresses allowed to deploy, report and read.
   class GroupState
   {
     public:
      GroupState(Hash groupId, std::vector<Address> parties);

      const Hash&                 group_id() const { return groupId_; }
      const std::vector<Address>& parties() const { return parties_; }
      bool                        is_party(const Address& a) const;
      bool                        deployed() const { return deployed_; }

      void          deploy_register_breach(const Address& deployer);
      std::uint64_t register_breach(const Address& reporter, const BreachArgs& args);
      /// All-or-nothing: every entry is checked before any is appended.
      /// Returns the assigned breach ids.
      std::vector<std::uint64_t> commit_breach_batch(const Address& caller, const BatchArgs& batch);

      const std::vector<BreachRecord>& view_breaches(const Address& caller) const;

      /// Private transactions executed so far.
      std::uint64_t executed() const { return executed_; }
      void          mark_executed() { ++executed_; }

      /// Canonical encoding for byte-equality across members.
      Bytes encode() const;

     private:
      void require_party(const Address& a) const;

      Hash                      groupId_;
      std::vector<Address>      parties_;
      bool                      deployed_ = false;
      std::vector<BreachRecord> breaches_;
      std::uint64_t             executed_ = 0;
   };
}  // namespace hybridchain::contracts
