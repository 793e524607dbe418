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
#include "hybridchain/node/contract_manager.hpp"
#include "hybridchain/node/credential.hpp"

#include <functional>
#include <optional>
#include <string>

namespace hybridchain::node
{
   /// A client call into a node. `groupId` is set exactly for private methods.
   struct RpcRequest
   {
      std::string         method;
      Bytes               params;
      Address             sender;
      std::optional<Hash> groupId;
      /// Client-side initiation time, carried through for latency metering.
      Millis submittedAt = 0;
   };

   /// Node-side facts the RPC manager consults.
   struct RpcContext
   {
      const contracts::Abi&    abi;
      const CredentialManager& credentials;
      const ContractManager&   contracts;
      /// Does this node's enclave hold the group?
      std::function<bool(const Hash&)> groupKnown;
      /// Is the address one of the group's parties?
      std::function<bool(const Hash&, const Address&)> isParty;
   };

   /// Checks a transaction-producing request and returns its ABI entry.
   /// Throws UnknownMethod, MalformedRequest, RoleViolation, UnknownGroup or
   /// NotGroupMember. Nothing reaches the pool unless this returns.
   const contracts::AbiOperation& validate_submit(const RpcRequest& request, const RpcContext& ctx);

   /// Same checks for read-only methods. Public reads need no credential;
   /// private reads need the sender's credential on a node in the group, and
   /// fail with NotGroupMember otherwise.
   const contracts::AbiOperation& validate_query(const RpcRequest& request, const RpcContext& ctx);
}  // namespace hybridchain::node
