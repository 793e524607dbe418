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

#include "hybridchain/node/rpc.hpp"

namespace hybridchain::node
{
   namespace
   {
      const contracts::AbiOperation& common_checks(const RpcRequest& request, const RpcContext& ctx, bool query)
      {
         const auto* op = ctx.abi.find(request.method);
         if (!op)
            throw NodeError(NodeErrorCode::UnknownMethod, request.method);
         if (op->query != query)
            throw NodeError(NodeErrorCode::MalformedRequest,
                            request.method + (query ? " is not a query" : " is a query, not a transaction"));

         bool isPrivate = op->visibility == contracts::Visibility::Private;
         if (isPrivate != request.groupId.has_value())
            throw NodeError(NodeErrorCode::MalformedRequest,
                            request.method + (isPrivate ? " needs a privacy group" : " takes no privacy group"));
         if (!ctx.contracts.find(op->contract) && !isPrivate)
            throw NodeError(NodeErrorCode::UnknownMethod, op->contract + " is not deployed");

         try
         {
            ctx.abi.validate_args(*op, request.params);
         }
         catch (const DecodeError& e)
         {
            throw NodeError(NodeErrorCode::MalformedRequest, request.method + ": " + e.what());
         }
         catch (const contracts::ContractError& e)
         {
            throw NodeError(NodeErrorCode::MalformedRequest, request.method + ": " + e.what());
         }

         if (isPrivate)
         {
            if (!ctx.groupKnown || !ctx.groupKnown(*request.groupId))
               throw NodeError(query ? NodeErrorCode::NotGroupMember : NodeErrorCode::UnknownGroup,
                               "group " + request.groupId->str() + " is not held by this node");
            if (query && !ctx.credentials.holds(request.sender))
               throw NodeError(NodeErrorCode::NotGroupMember, "no credential held for " + request.sender.str());
            if (!ctx.isParty || !ctx.isParty(*request.groupId, request.sender))
               throw NodeError(NodeErrorCode::NotGroupMember, request.sender.str());
         }
         return *op;
      }

      void check_role(const contracts::AbiOperation& op, const RpcRequest& request, const RpcContext& ctx)
      {
         using contracts::RoleRequirement;
         if (op.role != RoleRequirement::Consumer && op.role != RoleRequirement::Provider)
            return;
         auto want  = op.role == RoleRequirement::Consumer ? contracts::Role::Consumer : contracts::Role::Provider;
         auto bound = ctx.credentials.get(request.sender).boundRole;
         if (bound != want)
            throw NodeError(NodeErrorCode::RoleViolation,
                            request.method + " requires the " +
                                std::string(want == contracts::Role::Consumer ? "consumer" : "provider") + " role");
      }
   }  // namespace

   const contracts::AbiOperation& validate_submit(const RpcRequest& request, const RpcContext& ctx)
   {
      const auto& op = common_checks(request, ctx, false);
      if (!ctx.credentials.holds(request.sender))
         throw NodeError(NodeErrorCode::MalformedRequest, "no credential held for " + request.sender.str());
      check_role(op, request, ctx);
      return op;
   }

   const contracts::AbiOperation& validate_query(const RpcRequest& request, const RpcContext& ctx)
   {
      return common_checks(request, ctx, true);
   }
}  // namespace hybridchain::node
