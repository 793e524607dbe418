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
#include "hybridchain/node/credential.hpp"
#include "hybridchain/node/rpc.hpp"
#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace hybridchain;
using namespace hybridchain::node;
using hybridchain::fixtures::hash_of;
using hybridchain::fixtures::seed_of;

namespace
{
   NodeErrorCode code_of(const std::function<void()>& f)
   {
      try
      {
         f();
      }
      catch (const NodeError& e)
      {
         return e.code;
      }
      ADD_FAILURE() << "call did not fail";
      return NodeErrorCode::KeyMismatch;
   }

   struct Fixture
   {
      CredentialManager creds;
      ContractManager   contracts;
      Address           provider;
      Address           consumer;
      Hash              group = hash_of("group");

      Fixture()
      {
         contracts.deploy_genesis();
         provider = creds.add(seed_of(1));
         consumer = creds.add(seed_of(2));
         creds.bind_role(provider, contracts::Role::Provider);
         creds.bind_role(consumer, contracts::Role::Consumer);
      }

      RpcContext ctx(bool holdsGroup = true)
      {
         return {contracts::Abi::builtin(), creds, contracts,
                 [this, holdsGroup](const Hash& g) { return holdsGroup && g == group; },
                 [this](const Hash&, const Address& a) { return a == provider || a == consumer; }};
      }
   };
}  // namespace

TEST(Credentials, BindingAndSigning)
{
   CredentialManager m;
   auto              a = m.add(seed_of(1));
   EXPECT_EQ(a, fixtures::key_of(1).address());
   EXPECT_TRUE(m.holds(a));
   m.bind_role(a, contracts::Role::Consumer);
   EXPECT_EQ(code_of([&] { m.bind_role(a, contracts::Role::Provider); }), NodeErrorCode::RoleAlreadyBound);
   EXPECT_EQ(code_of([&] { m.get(fixtures::key_of(9).address()); }), NodeErrorCode::UnknownCredential);

   ledger::Transaction tx;
   tx.sender   = a;
   tx.kind     = ledger::PublicCall{"RegistrationAD", "register", {0}};
   tx.gasLimit = 41'000;
   EXPECT_TRUE(ledger::verify_transaction(m.sign_transaction(tx)));
   tx.sender = fixtures::key_of(9).address();
   EXPECT_THROW(m.sign_transaction(tx), NodeError);
   EXPECT_EQ(code_of([&] { sign_transaction(make_credential(seed_of(1)), tx); }), NodeErrorCode::KeyMismatch);
}

TEST(Credentials, NonceAllocationRunsAheadOfChain)
{
   CredentialManager m;
   auto              a = m.add(seed_of(1));
   EXPECT_EQ(m.allocate_nonce(a, 0), 0u);
   EXPECT_EQ(m.allocate_nonce(a, 0), 1u);
   EXPECT_EQ(m.allocate_nonce(a, 5), 5u);
   EXPECT_EQ(m.allocate_nonce(a, 5), 6u);
}

TEST(ContractManager, DeploymentAndVersioning)
{
   ContractManager m;
   m.deploy_genesis();
   const auto* r = m.find("AddService");
   ASSERT_NE(r, nullptr);
   EXPECT_EQ(r->version, 1u);
   EXPECT_EQ(r->address, contract_address("AddService", 1));
   EXPECT_EQ(m.deploy("AddService", contracts::Visibility::Public).version, 2u);
   auto g = hash_of("g");
   EXPECT_EQ(m.deploy("RegisterBreach", contracts::Visibility::Private, g).version, 1u);
   EXPECT_FALSE(m.find("RegisterBreach"));
   EXPECT_EQ(code_of([&] { m.deploy("RegisterBreach", contracts::Visibility::Public); }),
             NodeErrorCode::VisibilityViolation);
   EXPECT_EQ(code_of([&] { m.deploy("RegisterBreach", contracts::Visibility::Private); }),
             NodeErrorCode::VisibilityViolation);
   EXPECT_EQ(code_of([&] { m.deploy("AddService", contracts::Visibility::Public, g); }),
             NodeErrorCode::VisibilityViolation);
   EXPECT_EQ(code_of([&] { m.deploy("Nope", contracts::Visibility::Public); }), NodeErrorCode::UnknownMethod);
}

TEST(Rpc, SubmitValidation)
{
   Fixture f;
   auto    ctx = f.ctx();
   auto    sel = contracts::encode(contracts::SelectArgs{1});
   EXPECT_EQ(validate_submit({"select_service", sel, f.consumer, std::nullopt, 0}, ctx).name, "select_service");

   EXPECT_EQ(code_of([&] { validate_submit({"nope", {}, f.consumer, std::nullopt, 0}, ctx); }),
             NodeErrorCode::UnknownMethod);
   EXPECT_EQ(code_of([&] { validate_submit({"list_services", {}, f.consumer, std::nullopt, 0}, ctx); }),
             NodeErrorCode::MalformedRequest);
   EXPECT_EQ(code_of([&] { validate_submit({"select_service", Bytes{1}, f.consumer, std::nullopt, 0}, ctx); }),
             NodeErrorCode::MalformedRequest);
   EXPECT_EQ(code_of([&] { validate_submit({"select_service", sel, f.consumer, f.group, 0}, ctx); }),
             NodeErrorCode::MalformedRequest);
   EXPECT_EQ(code_of([&] { validate_submit({"select_service", sel, f.provider, std::nullopt, 0}, ctx); }),
             NodeErrorCode::RoleViolation);
   EXPECT_EQ(code_of([&] {
                validate_submit({"select_service", sel, fixtures::key_of(9).address(), std::nullopt, 0}, ctx);
             }),
             NodeErrorCode::MalformedRequest);
}

TEST(Rpc, PrivateSubmitValidation)
{
   Fixture f;
   contracts::BreachArgs entry{hash_of("s"), hash_of("d"), contracts::Severity::Low, 1};
   auto                  args = contracts::encode(entry);
   auto                  ctx  = f.ctx();
   EXPECT_NO_THROW(validate_submit({"register_breach", args, f.consumer, f.group, 0}, ctx));
   EXPECT_EQ(code_of([&] { validate_submit({"register_breach", args, f.consumer, std::nullopt, 0}, ctx); }),
             NodeErrorCode::MalformedRequest);
   EXPECT_EQ(code_of([&] { validate_submit({"register_breach", args, f.consumer, hash_of("other"), 0}, ctx); }),
             NodeErrorCode::UnknownGroup);

   CredentialManager& creds = f.creds;
   auto               third = creds.add(seed_of(3));
   EXPECT_EQ(code_of([&] { validate_submit({"register_breach", args, third, f.group, 0}, ctx); }),
             NodeErrorCode::NotGroupMember);
   auto absent = f.ctx(false);
   EXPECT_EQ(code_of([&] { validate_query({"view_breaches", {}, f.consumer, f.group, 0}, absent); }),
             NodeErrorCode::NotGroupMember);
   EXPECT_NO_THROW(validate_query({"view_breaches", {}, f.consumer, f.group, 0}, ctx));
   EXPECT_NO_THROW(validate_query({"list_domains", {}, third, std::nullopt, 0}, ctx));
}
