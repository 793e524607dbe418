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

#include "hybridchain/privacy/enclave.hpp"
#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace hybridchain;
using namespace hybridchain::privacy;
using hybridchain::fixtures::seed_of;

namespace
{
   PrivacyErrorCode code_of(const std::function<void()>& f)
   {
      try
      {
         f();
      }
      catch (const PrivacyError& e)
      {
         return e.code;
      }
      ADD_FAILURE() << "call did not fail";
      return PrivacyErrorCode::UnknownGroup;
   }

   struct Trio
   {
      Enclave      a{crypto::BoxKeyPair::from_seed(seed_of(1))};
      Enclave      b{crypto::BoxKeyPair::from_seed(seed_of(2))};
      Enclave      outsider{crypto::BoxKeyPair::from_seed(seed_of(3))};
      PrivacyGroup group;
      crypto::SymmetricKey key;

      Trio()
      {
         group = create_privacy_group({a.public_key(), b.public_key()}, Bytes{1, 2, 3},
                                      {fixtures::key_of(10).address(), fixtures::key_of(11).address()}, 0);
         key   = derive_group_key(7, group.groupId);
         a.install_group(group, key);
         b.install_group(group, key);
      }
   };
}  // namespace

TEST(PrivacyGroup, CreationRules)
{
   auto k1 = crypto::BoxKeyPair::from_seed(seed_of(1)).public_key();
   auto k2 = crypto::BoxKeyPair::from_seed(seed_of(2)).public_key();
   EXPECT_EQ(code_of([&] { create_privacy_group({k1}, {}, {}, 0); }), PrivacyErrorCode::TooFewMembers);
   EXPECT_EQ(code_of([&] { create_privacy_group({k1, k1}, {}, {}, 0); }), PrivacyErrorCode::TooFewMembers);
   EXPECT_EQ(code_of([&] { create_privacy_group({k1, k2}, {}, {}, 0, [&](const auto& k) { return k == k1; }); }),
             PrivacyErrorCode::UnknownMember);

   auto g1 = create_privacy_group({k2, k1}, Bytes{9}, {}, 0);
   auto g2 = create_privacy_group({k1, k2}, Bytes{9}, {}, 0);
   EXPECT_EQ(g1.groupId, g2.groupId);
   EXPECT_EQ(g1.groupId, derive_group_id({k1, k2}, Bytes{9}));
   EXPECT_NE(g1.groupId, derive_group_id({k1, k2}, Bytes{8}));
   EXPECT_TRUE(std::is_sorted(g1.members.begin(), g1.members.end()));
}

TEST(PrivacyGroup, PairSaltDistinguishesDirection)
{
   auto x = fixtures::key_of(1).address();
   auto y = fixtures::key_of(2).address();
   EXPECT_NE(pair_salt(x, y), pair_salt(y, x));
}

TEST(Enclave, SealOpenAndNonMembers)
{
   Trio t;
   crypto::AeadNonce n;
   n.raw().fill(4);
   auto payload = t.a.seal(t.group.groupId, as_bytes("call"), n);
   auto opened  = t.b.open(payload);
   ASSERT_TRUE(opened);
   EXPECT_EQ(std::string(opened->begin(), opened->end()), "call");
   EXPECT_FALSE(t.outsider.open(payload));
   EXPECT_FALSE(t.outsider.store(payload));
   EXPECT_EQ(t.outsider.stored_count(), 0u);
   EXPECT_TRUE(t.b.store(payload));
   EXPECT_NE(t.b.find(payload.payload_hash()), nullptr);

   EXPECT_EQ(code_of([&] { t.a.seal(t.group.groupId, {}, n); }), PrivacyErrorCode::EmptyPayload);
   EXPECT_EQ(code_of([&] { t.outsider.seal(t.group.groupId, as_bytes("x"), n); }), PrivacyErrorCode::UnknownGroup);
   EXPECT_EQ(code_of([&] { t.outsider.install_group(t.group, t.key); }), PrivacyErrorCode::NotGroupMember);

   auto tampered = payload;
   tampered.ciphertext[0] ^= 1;
   EXPECT_FALSE(t.b.open(tampered));
}

TEST(Enclave, KeyDeliveryOnlyOpensForRecipient)
{
   Trio    t;
   Enclave fresh{crypto::BoxKeyPair::from_seed(seed_of(2))};
   crypto::BoxNonce n;
   n.raw().fill(5);
   auto delivery = t.a.deliver_key(t.group.groupId, fresh.public_key(), n);
   EXPECT_EQ(fresh.accept_key(delivery).groupId, t.group.groupId);
   EXPECT_TRUE(fresh.is_member(t.group.groupId));

   EXPECT_EQ(code_of([&] { t.a.deliver_key(t.group.groupId, t.outsider.public_key(), n); }),
             PrivacyErrorCode::NotGroupMember);
   auto broken = delivery;
   broken.sealedKey[3] ^= 1;
   Enclave again{crypto::BoxKeyPair::from_seed(seed_of(2))};
   EXPECT_EQ(code_of([&] { again.accept_key(broken); }), PrivacyErrorCode::AuthenticationFailed);
}

TEST(Distribution, ComponentIsProcessingPlusSlowestHop)
{
   Trio t;
   auto link = sim::LatencyDist::uniform(400, 2600);
   auto d    = distribute_payload(t.a, t.group.groupId, as_bytes("payload"), 3, 0, link, 0.15, 300);
   ASSERT_EQ(d.plan.hops.size(), 1u);
   EXPECT_EQ(d.plan.hops[0].recipient, t.b.public_key());

   // Oracle: redraw the hop from its own stream in the documented order.
   auto   rng     = hop_rng(3, d.payload.payload_hash(), t.b.public_key());
   Millis first   = link.sample(rng);
   bool   tamper  = rng.bernoulli(0.15);
   Millis request = link.sample(rng);
   Millis resend  = link.sample(rng);
   EXPECT_EQ(d.plan.component(), 300 + first + (tamper ? request + resend : 0));

   EXPECT_EQ(code_of([&] { distribute_payload(t.outsider, t.group.groupId, as_bytes("x"), 3, 0, link, 0, 0); }),
             PrivacyErrorCode::NotGroupMember);
}

TEST(Distribution, TamperedHopsAddRefetchRoundTrip)
{
   HopPlan h{{}, 100, true, 30, 40};
   EXPECT_EQ(h.completion(), 170);
   h.tampered = false;
   EXPECT_EQ(h.completion(), 100);
   DistributionPlan p{50, {h, HopPlan{{}, 90, true, 20, 20}}};
   EXPECT_EQ(p.component(), 50 + 130);
}

TEST(Distribution, TamperRateZeroAndOne)
{
   Trio t;
   auto link = sim::LatencyDist::fixed(10);
   for (std::uint64_t seq = 0; seq < 20; ++seq)
   {
      auto none = distribute_payload(t.a, t.group.groupId, as_bytes("p"), 1, seq, link, 0.0, 0);
      auto all  = distribute_payload(t.a, t.group.groupId, as_bytes("p"), 1, seq, link, 1.0, 0);
      EXPECT_EQ(none.plan.component(), 10);
      EXPECT_EQ(all.plan.component(), 30);
   }
}

TEST(Wire, MessagesRoundTrip)
{
   Trio              t;
   crypto::AeadNonce n;
   auto              payload = t.a.seal(t.group.groupId, as_bytes("x"), n);
   EXPECT_EQ(decode_payload(encode_payload(payload)), payload);

   PrivateCall call{fixtures::key_of(1).address(), "register_breach", Bytes{1, 2}};
   EXPECT_EQ(decode_private_call(encode(call)), call);

   auto msg  = EnclaveMessage{PayloadPush{payload, payload.payload_hash()}};
   auto back = decode_enclave_message(encode(msg));
   ASSERT_TRUE(std::holds_alternative<PayloadPush>(back));
   EXPECT_EQ(std::get<PayloadPush>(back).payload, payload);
   EXPECT_THROW(decode_enclave_message(Bytes{42}), DecodeError);
}
