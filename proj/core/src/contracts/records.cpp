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

#include "hybridchain/contracts/records.hpp"

#include "hybridchain/crypto.hpp"

#include <array>
#include <utility>

namespace hybridchain::contracts
{
   namespace
   {
      constexpr std::array<std::pair<ContractErrorCode, std::string_view>, 13> error_names{{
          {ContractErrorCode::AlreadyRegistered, "AlreadyRegistered"},
          {ContractErrorCode::NotRegistered, "NotRegistered"},
          {ContractErrorCode::RoleViolation, "RoleViolation"},
          {ContractErrorCode::MaxServicesExceeded, "MaxServicesExceeded"},
          {ContractErrorCode::DuplicateService, "DuplicateService"},
          {ContractErrorCode::UnknownService, "UnknownService"},
          {ContractErrorCode::ServiceUnavailable, "ServiceUnavailable"},
          {ContractErrorCode::NotGroupMember, "NotGroupMember"},
          {ContractErrorCode::AlreadyDeployed, "AlreadyDeployed"},
          {ContractErrorCode::NotDeployed, "NotDeployed"},
          {ContractErrorCode::EmptyBatch, "EmptyBatch"},
          {ContractErrorCode::UnknownOperation, "UnknownOperation"},
          {ContractErrorCode::InvalidArgument, "InvalidArgument"},
      }};

      constexpr std::string_view batch_domain = "hybridchain/breach-batch/v1";

      Role decode_role(std::uint8_t v)
      {
         if (v > 1)
            throw ContractError(ContractErrorCode::InvalidArgument, "role out of range");
         return static_cast<Role>(v);
      }

      Severity decode_severity(std::uint8_t v)
      {
         if (v > 2)
            throw ContractError(ContractErrorCode::InvalidArgument, "severity out of range");
         return static_cast<Severity>(v);
      }

      void encode_entry(Encoder& e, const BreachArgs& a)
      {
         e.fixed(a.slaTermsHash)
             .fixed(a.detailsHash)
             .u8(static_cast<std::uint8_t>(a.severity))
             .i64(a.reportedAt);
      }

      BreachArgs decode_entry(Decoder& d)
      {
         BreachArgs a;
         a.slaTermsHash = d.fixed<Hash>();
         a.detailsHash  = d.fixed<Hash>();
         a.severity     = decode_severity(d.u8());
         a.reportedAt   = d.i64();
         return a;
      }
   }  // namespace

   std::string_view to_string(ContractErrorCode code)
   {
      for (const auto& [c, name] : error_names)
         if (c == code)
            return name;
      return "ContractError";
   }

   std::optional<ContractErrorCode> contract_error_from_string(std::string_view name)
   {
      for (const auto& [c, n] : error_names)
         if (n == name)
            return c;
      return std::nullopt;
   }

   std::string_view to_string(Role role)
   {
      return role == Role::Consumer ? "consumer" : "provider";
   }

   std::string_view to_string(Severity severity)
   {
      switch (severity)
      {
         case Severity::Low:
            return "low";
         case Severity::Medium:
            return "medium";
         case Severity::High:
            return "high";
      }
      return "unknown";
   }

   Bytes encode(const RegisterArgs& a)
   {
      Encoder e;
      e.u8(static_cast<std::uint8_t>(a.role));
      return std::move(e).take();
   }

   Bytes encode(const PublishArgs& a)
   {
      Encoder e;
      e.u64(a.price).str(a.quality).boolean(a.availability);
      return std::move(e).take();
   }

   Bytes encode(const SelectArgs& a)
   {
      Encoder e;
      e.u64(a.serviceId);
      return std::move(e).take();
   }

   Bytes encode(const BreachArgs& a)
   {
      Encoder e;
      encode_entry(e, a);
      return std::move(e).take();
   }

   Bytes encode(const BatchArgs& a)
   {
      Encoder e;
      e.u32(static_cast<std::uint32_t>(a.entries.size()));
      for (const auto& entry : a.entries)
         encode_entry(e, entry);
      return std::move(e).take();
   }

   RegisterArgs decode_register_args(ByteView bytes)
   {
      Decoder      d(bytes);
      RegisterArgs a{decode_role(d.u8())};
      d.expect_done();
      return a;
   }

   PublishArgs decode_publish_args(ByteView bytes)
   {
      Decoder     d(bytes);
      PublishArgs a;
      a.price        = d.u64();
      a.quality      = d.str();
      a.availability = d.boolean();
      d.expect_done();
      return a;
   }

   SelectArgs decode_select_args(ByteView bytes)
   {
      Decoder    d(bytes);
      SelectArgs a{d.u64()};
      d.expect_done();
      return a;
   }

   BreachArgs decode_breach_args(ByteView bytes)
   {
      Decoder d(bytes);
      auto    a = decode_entry(d);
      d.expect_done();
      return a;
   }

   BatchArgs decode_batch_args(ByteView bytes)
   {
      Decoder   d(bytes);
      BatchArgs a;
      auto      n = d.u32();
      // Each entry is 73 bytes; reject counts the input cannot hold before
      // reserving anything.
      if (static_cast<std::uint64_t>(n) * 73 > d.remaining())
         throw DecodeError("batch count exceeds input");
      for (std::uint32_t i = 0; i < n; ++i)
         a.entries.push_back(decode_entry(d));
      d.expect_done();
      return a;
   }

   void encode(Encoder& e, const DomainRecord& r)
   {
      e.fixed(r.address).u8(static_cast<std::uint8_t>(r.role)).i64(r.registeredAt);
   }

   void encode(Encoder& e, const ServiceRecord& r)
   {
      e.u64(r.serviceId).fixed(r.provider).u64(r.price).str(r.qualityConstraint).boolean(
          r.availability);
   }

   void encode(Encoder& e, const SelectionRecord& r)
   {
      e.u64(r.selectionId).fixed(r.consumer).u64(r.serviceId).i64(r.selectedAt);
   }

   void encode(Encoder& e, const BreachRecord& r)
   {
      e.u64(r.breachId).fixed(r.reporter);
      encode_entry(e, BreachArgs{r.slaTermsHash, r.detailsHash, r.severity, r.reportedAt});
   }

   Hash batch_summary_hash(const std::vector<BreachRecord>& records)
   {
      Encoder e;
      e.str(batch_domain).u32(static_cast<std::uint32_t>(records.size()));
      for (const auto& r : records)
      {
         e.fixed(r.reporter);
         encode_entry(e, BreachArgs{r.slaTermsHash, r.detailsHash, r.severity, r.reportedAt});
      }
      return crypto::sha256(e.data());
   }

   Hash batch_summary_hash(const Address& reporter, const std::vector<BreachArgs>& entries)
   {
      Encoder e;
      e.str(batch_domain).u32(static_cast<std::uint32_t>(entries.size()));
      for (const auto& entry : entries)
      {
         e.fixed(reporter);
         encode_entry(e, entry);
      }
      return crypto::sha256(e.data());
   }
}  // namespace hybridchain::contracts
