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

#include "hybridchain/contracts/public_state.hpp"

#include <algorithm>

namespace hybridchain::contracts
{
   namespace
   {
      void check(bool cond, ContractErrorCode code, const std::string& what)
      {
         if (!cond)
            throw ContractError(code, what);
      }
   }  // namespace

   const DomainRecord* PublicState::domain(const Address& a) const
   {
      auto it = domainIndex_.find(a);
      return it == domainIndex_.end() ? nullptr : &domains_[it->second];
   }

   const ServiceRecord* PublicState::service(std::uint64_t id) const
   {
      return id < services_.size() ? &services_[id] : nullptr;
   }

   std::size_t PublicState::live_service_count(const Address& provider) const
   {
      auto it = serviceCounts_.find(provider);
      return it == serviceCounts_.end() ? 0 : it->second;
   }

   std::uint64_t PublicState::next_nonce(const Address& a) const
   {
      auto it = nonces_.find(a);
      return it == nonces_.end() ? 0 : it->second;
   }

   void PublicState::register_domain(const Address& caller, Role role, Millis now)
   {
      check(!domain(caller), ContractErrorCode::AlreadyRegistered, caller.str());
      domainIndex_.emplace(caller, domains_.size());
      domains_.push_back({caller, role, now});
   }

   std::uint64_t PublicState::publish_service(const Address& caller, const PublishArgs& args)
   {
      const auto* d = domain(caller);
      check(d, ContractErrorCode::NotRegistered, caller.str());
      check(d->role == Role::Provider, ContractErrorCode::RoleViolation,
            "publish_service requires the provider role");
      check(args.quality.size() <= max_quality_bytes, ContractErrorCode::InvalidArgument,
            "quality constraint longer than 256 bytes");
      check(live_service_count(caller) < max_services_per_provider,
            ContractErrorCode::MaxServicesExceeded, caller.str());
      bool duplicate = std::any_of(services_.begin(), services_.end(), [&](const ServiceRecord& s) {
         return s.provider == caller && s.price == args.price &&
                s.qualityConstraint == args.quality && s.availability == args.availability;
      });
      check(!duplicate, ContractErrorCode::DuplicateService, caller.str());

      std::uint64_t id = services_.size();
      services_.push_back({id, caller, args.price, args.quality, args.availability});
      ++serviceCounts_[caller];
      return id;
   }

   PrivacyGroupRequested PublicState::select_service(const Address& caller, std::uint64_t serviceId,
                                                     Millis now)
   {
      const auto* d = domain(caller);
      check(d, ContractErrorCode::NotRegistered, caller.str());
      check(d->role == Role::Consumer, ContractErrorCode::RoleViolation,
            "select_service requires the consumer role");
      const auto* s = service(serviceId);
      check(s, ContractErrorCode::UnknownService, std::to_string(serviceId));
      check(s->availability, ContractErrorCode::ServiceUnavailable, std::to_string(serviceId));

      std::uint64_t id = selections_.size();
      selections_.push_back({id, caller, serviceId, now});
      return {id, caller, s->provider};
   }

   TxResult PublicState::apply(const ledger::Transaction& tx, Millis blockTime, const Abi& abi)
   {
      TxResult result;
      nonces_[tx.sender] = tx.nonce + 1;
      const auto* call   = tx.call();
      if (!call)
         return result;
      try
      {
         const auto* op = abi.find(call->operation);
         check(op && !op->query && op->visibility == Visibility::Public &&
                   op->contract == call->contract,
               ContractErrorCode::UnknownOperation, call->contract + "." + call->operation);
         if (op->name == "register")
            register_domain(tx.sender, decode_register_args(call->args).role, blockTime);
         else if (op->name == "publish_service")
            result.createdId = publish_service(tx.sender, decode_publish_args(call->args));
         else if (op->name == "select_service")
         {
            auto req            = select_service(tx.sender, decode_select_args(call->args).serviceId,
                                                 blockTime);
            result.createdId    = req.selectionId;
            result.groupRequest = req;
         }
         else
            throw ContractError(ContractErrorCode::UnknownOperation, op->name);
      }
      catch (const ContractError& e)
      {
         result.error = e.code;
      }
      catch (const DecodeError&)
      {
         result.error = ContractErrorCode::InvalidArgument;
      }
      return result;
   }

   Bytes PublicState::encode() const
   {
      Encoder e;
      e.u32(static_cast<std::uint32_t>(domains_.size()));
      for (const auto& d : domains_)
         contracts::encode(e, d);
      e.u32(static_cast<std::uint32_t>(services_.size()));
      for (const auto& s : services_)
         contracts::encode(e, s);
      e.u32(static_cast<std::uint32_t>(selections_.size()));
      for (const auto& s : selections_)
         contracts::encode(e, s);
      e.u32(static_cast<std::uint32_t>(nonces_.size()));
      for (const auto& [a, n] : nonces_)
         e.fixed(a).u64(n);
      return std::move(e).take();
   }
}  // namespace hybridchain::contracts
