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

#include "hybridchain/bytes.hpp"
#include "hybridchain/encoding.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hybridchain::contracts
{
   enum class ContractErrorCode
   {
      AlreadyRegistered,
      NotRegistered,
      RoleViolation,
      MaxServicesExceeded,
      DuplicateService,
      UnknownService,
      ServiceUnavailable,
      NotGroupMember,
      AlreadyDeployed,
      NotDeployed,
      EmptyBatch,
      UnknownOperation,
      InvalidArgument,
   };

   std::string_view                 to_string(ContractErrorCode code);
   std::optional<ContractErrorCode> contract_error_from_string(std::string_view name);

   struct ContractError : std::runtime_error
   {
      ContractError(ContractErrorCode c, const std::string& what)
          : std::runtime_error(std::string(to_string(c)) + ": " + what), code(c)
      {
      }
      ContractErrorCode code;
   };

   enum class Role : std::uint8_t
   {
      Consumer = 0,
      Provider = 1,
   };

   enum class Severity : std::uint8_t
   {
      Low    = 0,
      Medium = 1,
      High   = 2,
   };

   std::string_view to_string(Role role);
   std::string_view to_string(Severity severity);

   /// Longest accepted quality-constraint descriptor, in bytes.
   inline constexpr std::size_t max_quality_bytes = 256;
   /// Services a single provider may publish.
   inline constexpr std::size_t max_services_per_provider = 5;

   struct DomainRecord
   {
      Address address;
      Role    role         = Role::Consumer;
      Millis  registeredAt = 0;

      friend bool operator==(const DomainRecord&, const DomainRecord&) = default;
   };

   struct ServiceRecord
   {
      std::uint64_t serviceId = 0;
      Address       provider;
      std::uint64_t price = 0;
      std::string   qualityConstraint;
      bool          availability = true;

      friend bool operator==(const ServiceRecord&, const ServiceRecord&) = default;
   };

   struct SelectionRecord
   {
      std::uint64_t selectionId = 0;
      Address       consumer;
      std::uint64_t serviceId  = 0;
      Millis        selectedAt = 0;

      friend bool operator==(const SelectionRecord&, const SelectionRecord&) = default;
   };

   struct BreachRecord
   {
      std::uint64_t breachId = 0;
      Address       reporter;
      Hash          slaTermsHash;
      Hash          detailsHash;
      Severity      severity   = Severity::Low;
      Millis        reportedAt = 0;

      friend bool operator==(const BreachRecord&, const BreachRecord&) = default;
   };

   // Call arguments, in the order the ABI lists them.

   struct RegisterArgs
   {
      Role role = Role::Consumer;
   };

   struct PublishArgs
   {
      std::uint64_t price = 0;
      std::string   quality;
      bool          availability = true;
   };

   struct SelectArgs
   {
      std::uint64_t serviceId = 0;
   };

   struct BreachArgs
   {
      Hash     slaTermsHash;
      Hash     detailsHash;
      Severity severity   = Severity::Low;
      Millis   reportedAt = 0;

      friend bool operator==(const BreachArgs&, const BreachArgs&) = default;
   };

   struct BatchArgs
   {
      std::vector<BreachArgs> entries;
   };

   Bytes encode(const RegisterArgs& a);
   Bytes encode(const PublishArgs& a);
   Bytes encode(const SelectArgs& a);
   Bytes encode(const BreachArgs& a);
   Bytes encode(const BatchArgs& a);

   /// Decoders throw DecodeError on malformed input or trailing bytes, and
   /// ContractError(InvalidArgument) on out-of-range enum values.
   RegisterArgs decode_register_args(ByteView bytes);
   PublishArgs  decode_publish_args(ByteView bytes);
   SelectArgs   decode_select_args(ByteView bytes);
   BreachArgs   decode_breach_args(ByteView bytes);
   BatchArgs    decode_batch_args(ByteView bytes);

   void encode(Encoder& e, const DomainRecord& r);
   void encode(Encoder& e, const ServiceRecord& r);
   void encode(Encoder& e, const SelectionRecord& r);
   void encode(Encoder& e, const BreachRecord& r);

   /// Digest committed on-chain for a breach batch: every field of each
   /// record except the per-group breachId, in batch order.
   Hash batch_summary_hash(const std::vector<BreachRecord>& records);
   Hash batch_summary_hash(const Address& reporter, const std::vector<BreachArgs>& entries);
}  // namespace hybridchain::contracts
