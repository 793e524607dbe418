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

#include "hybridchain/contracts/abi.hpp"
#include "hybridchain/contracts/group_state.hpp"
#include "hybridchain/contracts/public_state.hpp"
#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace hybridchain;
using namespace hybridchain::contracts;
using hybridchain::fixtures::hash_of;
using hybridchain::fixtures::key_of;
using hybridchain::fixtures::public_tx;

namespace
{
   std::uint64_t static_gas_of(std::string_view method)
   {
      const auto& abi = Abi::builtin();
      return abi.static_gas(*abi.find(method));
   }

   template <typename F>
   ContractErrorCode error_of(F&& f)
   {
      try
      {
         f();
      }
      catch (const ContractError& e)
      {
         return e.code;
      }
      ADD_FAILURE() << "call did not fail";
      return ContractErrorCode::UnknownOperation;
   }

   const Address provider = key_of(1).address();
   const Address consumer = key_of(2).address();
   const Address stranger = key_of(3).address();
}  // namespace

TEST(Gas, StaticCostsFromSchedule)
{
   // base 21000, 20000 per storage write, 2100 per storage read
   EXPECT_EQ(static_gas_of("register"), 21'000u + 20'000u);
   EXPECT_EQ(static_gas_of("publish_service"), 21'000u + 2 * 20'000u);
   EXPECT_EQ(static_gas_of("select_service"), 21'000u + 2 * 20'000u + 2'100u);
   EXPECT_EQ(Abi::builtin().marker_gas(false), 21'000u);
   EXPECT_EQ(Abi::builtin().marker_gas(true), 41'000u);
   EXPECT_THROW(gas_of("no_such_op", 0, 0), ContractError);
}

TEST(Abi, BuiltinDeclaresContractsAndRoles)
{
   const auto& abi = Abi::builtin();
   EXPECT_EQ(abi.contracts(Visibility::Public), (std::vector<std::string>{"RegistrationAD", "AddService", "SelectService"}));
   EXPECT_EQ(abi.contracts(Visibility::Private), (std::vector<std::string>{"RegisterBreach"}));
   EXPECT_EQ(abi.find("publish_service")->role, RoleRequirement::Provider);
   EXPECT_EQ(abi.find("select_service")->role, RoleRequirement::Consumer);
   EXPECT_TRUE(abi.find("view_breaches")->query);
   EXPECT_EQ(*abi.contract_of("register_breach"), "RegisterBreach");
   EXPECT_EQ(abi.find("nope"), nullptr);
}

TEST(Abi, ParseErrorsCarryLineNumbers)
{
   try
   {
      Abi::parse("contract X public\n  op f(a: wat) writes=1 reads=0 role=any\nend\n");
      FAIL();
   }
   catch (const AbiParseError& e)
   {
      EXPECT_EQ(e.line, 2u);
   }
   EXPECT_THROW(Abi::parse("contract X public\n"), AbiParseError);
   EXPECT_THROW(Abi::parse("op f() writes=0 reads=0 role=any\n"), AbiParseError);
}

TEST(Abi, ValidateArgsRejectsWrongShape)
{
   const auto& abi = Abi::builtin();
   EXPECT_NO_THROW(abi.validate_args(*abi.find("select_service"), encode(SelectArgs{3})));
   EXPECT_THROW(abi.validate_args(*abi.find("select_service"), Bytes{1, 2}), DecodeError);
   EXPECT_THROW(abi.validate_args(*abi.find("register"), Bytes{5}), ContractError);
}

TEST(PublicState, RegistrationAndRoles)
{
   PublicState s;
   s.register_domain(provider, Role::Provider, 10);
   EXPECT_EQ(error_of([&] { s.register_domain(provider, Role::Consumer, 11); }), ContractErrorCode::AlreadyRegistered);
   ASSERT_NE(s.domain(provider), nullptr);
   EXPECT_EQ(s.domain(provider)->registeredAt, 10);
   EXPECT_EQ(s.domain(stranger), nullptr);
}

TEST(PublicState, PublishLimitsAndChecks)
{
   PublicState s;
   s.register_domain(provider, Role::Provider, 0);
   s.register_domain(consumer, Role::Consumer, 0);
   for (std::uint64_t i = 0; i < max_services_per_provider; ++i)
      EXPECT_EQ(s.publish_service(provider, {i, "q", true}), i);
   EXPECT_EQ(error_of([&] { s.publish_service(provider, {9, "q", true}); }), ContractErrorCode::MaxServicesExceeded);
   EXPECT_EQ(error_of([&] { s.publish_service(consumer, {1, "q", true}); }), ContractErrorCode::RoleViolation);
   EXPECT_EQ(error_of([&] { s.publish_service(stranger, {1, "q", true}); }), ContractErrorCode::NotRegistered);
   EXPECT_EQ(s.live_service_count(provider), max_services_per_provider);

   PublicState t;
   t.register_domain(provider, Role::Provider, 0);
   t.publish_service(provider, {1, "q", true});
   EXPECT_EQ(error_of([&] { t.publish_service(provider, {1, "q", true}); }), ContractErrorCode::DuplicateService);
   EXPECT_NO_THROW(t.publish_service(provider, {1, "q", false}));
   EXPECT_NO_THROW(t.publish_service(provider, {1, std::string(max_quality_bytes, 'x'), true}));
   EXPECT_EQ(error_of([&] { t.publish_service(provider, {1, std::string(max_quality_bytes + 1, 'x'), true}); }),
             ContractErrorCode::InvalidArgument);
}

TEST(PublicState, SelectionEmitsGroupRequest)
{
   PublicState s;
   s.register_domain(provider, Role::Provider, 0);
   s.register_domain(consumer, Role::Consumer, 0);
   s.publish_service(provider, {1, "q", true});
   s.publish_service(provider, {2, "q", false});
   auto req = s.select_service(consumer, 0, 77);
   EXPECT_EQ(req.selectionId, 0u);
   EXPECT_EQ(req.consumer, consumer);
   EXPECT_EQ(req.provider, provider);
   // Selection is not exclusive.
   EXPECT_EQ(s.select_service(consumer, 0, 78).selectionId, 1u);
   EXPECT_EQ(error_of([&] { s.select_service(consumer, 1, 0); }), ContractErrorCode::ServiceUnavailable);
   EXPECT_EQ(error_of([&] { s.select_service(consumer, 5, 0); }), ContractErrorCode::UnknownService);
   EXPECT_EQ(error_of([&] { s.select_service(provider, 0, 0); }), ContractErrorCode::RoleViolation);
   EXPECT_EQ(s.selections().size(), 2u);
}

TEST(PublicState, ApplyConsumesNonceEvenOnFailure)
{
   PublicState s;
   auto tx = public_tx(1, 0, "AddService", "publish_service", encode(PublishArgs{1, "q", true}), 61'000);
   auto r  = s.apply(tx, 0);
   ASSERT_TRUE(r.error);
   EXPECT_EQ(*r.error, ContractErrorCode::NotRegistered);
   EXPECT_EQ(s.next_nonce(tx.sender), 1u);
   EXPECT_TRUE(s.services().empty());

   auto bad = public_tx(1, 1, "SelectService", "register", encode(RegisterArgs{}), 41'000);
   EXPECT_EQ(*s.apply(bad, 0).error, ContractErrorCode::UnknownOperation);
   auto malformed = public_tx(1, 2, "RegistrationAD", "register", Bytes{}, 41'000);
   EXPECT_EQ(*s.apply(malformed, 0).error, ContractErrorCode::InvalidArgument);

   auto ok = public_tx(1, 3, "RegistrationAD", "register", encode(RegisterArgs{Role::Provider}), 41'000);
   EXPECT_TRUE(s.apply(ok, 5).ok());
   EXPECT_EQ(s.domain(ok.sender)->role, Role::Provider);
}

TEST(GroupState, DeployReportAndBatch)
{
   GroupState g(hash_of("g"), {provider, consumer});
   BreachArgs e{hash_of("sla"), hash_of("d"), Severity::Medium, 60'000};
   EXPECT_EQ(error_of([&] { g.register_breach(consumer, e); }), ContractErrorCode::NotDeployed);
   EXPECT_EQ(error_of([&] { g.deploy_register_breach(stranger); }), ContractErrorCode::NotGroupMember);
   g.deploy_register_breach(provider);
   EXPECT_EQ(error_of([&] { g.deploy_register_breach(consumer); }), ContractErrorCode::AlreadyDeployed);
   EXPECT_EQ(g.register_breach(consumer, e), 0u);
   EXPECT_EQ(g.register_breach(provider, e), 1u);
   EXPECT_EQ(error_of([&] { g.commit_breach_batch(consumer, {}); }), ContractErrorCode::EmptyBatch);
   EXPECT_EQ(g.commit_breach_batch(consumer, {{e, e, e}}), (std::vector<std::uint64_t>{2, 3, 4}));
   EXPECT_EQ(error_of([&] { g.view_breaches(stranger); }), ContractErrorCode::NotGroupMember);
   const auto& records = g.view_breaches(provider);
   ASSERT_EQ(records.size(), 5u);
   EXPECT_EQ(records[1].reporter, provider);
   EXPECT_EQ(records[4].reportedAt, 60'000);
}

TEST(GroupState, EncodingIsOrderIndependentInParties)
{
   GroupState a(hash_of("g"), {provider, consumer});
   GroupState b(hash_of("g"), {consumer, provider, consumer});
   EXPECT_EQ(a.encode(), b.encode());
   a.deploy_register_breach(consumer);
   EXPECT_NE(a.encode(), b.encode());
}

TEST(Records, ArgumentCodecs)
{
   PublishArgs p{7, "bw", false};
   auto        back = decode_publish_args(encode(p));
   EXPECT_EQ(back.price, 7u);
   EXPECT_EQ(back.quality, "bw");
   EXPECT_FALSE(back.availability);

   BreachArgs e{hash_of("a"), hash_of("b"), Severity::High, -5};
   EXPECT_EQ(decode_breach_args(encode(e)), e);
   auto bytes = encode(e);
   EXPECT_EQ(bytes.size(), 73u);
   bytes.push_back(0);
   EXPECT_THROW(decode_breach_args(bytes), DecodeError);

   BatchArgs batch{{e, e}};
   EXPECT_EQ(decode_batch_args(encode(batch)).entries.size(), 2u);
   Bytes huge = {0xff, 0xff, 0xff, 0xff};
   EXPECT_THROW(decode_batch_args(huge), DecodeError);
}

TEST(Records, BatchSummaryHashCoversEveryRecordField)
{
   BreachArgs e{hash_of("a"), hash_of("b"), Severity::High, 10};
   auto       base = batch_summary_hash(consumer, {e, e});
   EXPECT_NE(base, batch_summary_hash(provider, {e, e}));
   auto e2       = e;
   e2.reportedAt = 11;
   EXPECT_NE(base, batch_summary_hash(consumer, {e, e2}));
   EXPECT_NE(base, batch_summary_hash(consumer, {e}));

   std::vector<BreachRecord> records = {{0, consumer, e.slaTermsHash, e.detailsHash, e.severity, 10},
                                        {1, consumer, e.slaTermsHash, e.detailsHash, e.severity, 10}};
   EXPECT_EQ(batch_summary_hash(records), base);
   records[0].breachId = 40;
   EXPECT_EQ(batch_summary_hash(records), base);
}
