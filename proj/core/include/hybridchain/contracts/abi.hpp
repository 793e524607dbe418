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

#include "hybridchain/contracts/gas.hpp"
#include "hybridchain/contracts/records.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hybridchain::contracts
{
   enum class ArgType
   {
      U64,
      I64,
      Bool,
      String,
      Hash,
      Address,
      Role,
      Severity,
      BreachList,
   };

   enum class RoleRequirement
   {
      Any,
      Consumer,
      Provider,
      Member,
   };

   enum class Visibility
   {
      Public,
      Private,
   };

   struct AbiArg
   {
      std::string name;
      ArgType     type = ArgType::U64;
   };

   struct AbiOperation
   {
      std::string                    contract;
      Visibility                     visibility = Visibility::Public;
      std::string                    name;
      bool                           query = false;
      std::vector<AbiArg>            args;
      std::uint64_t                  writes = 0;
      std::uint64_t                  reads  = 0;
      RoleRequirement                role   = RoleRequirement::Any;
      std::vector<ContractErrorCode> errors;
   };

   struct AbiMarker
   {
      std::uint64_t writes = 0;
      std::uint64_t reads  = 0;
   };

   struct AbiParseError : std::runtime_error
   {
      AbiParseError(std::size_t line, const std::string& what)
          : std::runtime_error("abi line " + std::to_string(line) + ": " + what), line(line)
      {
      }
      std::size_t line;
   };

   class Abi
   {
     public:
      /// Throws AbiParseError.
      static Abi parse(std::string_view text);
      /// The ABI shipped with the library (core/abi/hybridchain.abi).
      static const Abi& builtin();
      static std::string_view builtin_text();

      const AbiOperation*              find(std::string_view method) const;
      const std::vector<AbiOperation>& operations() const { return ops_; }
      std::vector<std::string>         contracts(Visibility visibility) const;
      const std::string*               contract_of(std::string_view method) const;

      /// Throws DecodeError or ContractError(InvalidArgument) when `args` does
      /// not decode under the operation's argument list.
      void validate_args(const AbiOperation& op, ByteView args) const;

      /// Gas for a public operation: the schedule entry under its name plus
      /// its storage writes/reads.
      std::uint64_t static_gas(const AbiOperation& op,
                               const GasSchedule& schedule = default_gas_schedule()) const;
      std::uint64_t marker_gas(bool withSummary,
                               const GasSchedule& schedule = default_gas_schedule()) const;

     private:
      std::vector<AbiOperation> ops_;
      AbiMarker                 plainMarker_;
      AbiMarker                 summaryMarker_;
   };
}  // namespace hybridchain::contracts
