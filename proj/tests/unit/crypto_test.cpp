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

#include "hybridchain/crypto.hpp"
#include "hybridchain/rng.hpp"
#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace hybridchain;
using hybridchain::fixtures::seed_of;

TEST(Crypto, Sha256KnownVectors)
{
   EXPECT_EQ(crypto::sha256(as_bytes("abc")).str(),
             "0xba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
   EXPECT_EQ(crypto::sha256({}).str(), "0xe3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Crypto, IncrementalMatchesOneShot)
{
   crypto::Sha256 h;
   h.update(as_bytes("ab")).update(as_bytes("c"));
   EXPECT_EQ(h.finish(), crypto::sha256(as_bytes("abc")));
}

TEST(Crypto, SignAndVerify)
{
   auto key = crypto::SigningKey::from_seed(seed_of(1));
   auto sig = key.sign(as_bytes("message"));
   ASSERT_EQ(sig.size(), crypto::signature_blob_size);
   EXPECT_TRUE(crypto::verify(key.address(), as_bytes("message"), sig));
   EXPECT_FALSE(crypto::verify(key.address(), as_bytes("messagf"), sig));
   auto other = crypto::SigningKey::from_seed(seed_of(2));
   EXPECT_FALSE(crypto::verify(other.address(), as_bytes("message"), sig));
   sig[40] ^= 1;
   EXPECT_FALSE(crypto::verify(key.address(), as_bytes("message"), sig));
   EXPECT_FALSE(crypto::verify(key.address(), as_bytes("message"), Bytes(10)));
}

TEST(Crypto, AddressIsHashSuffixOfPublicKey)
{
   auto key  = crypto::SigningKey::from_seed(seed_of(3));
   auto h    = crypto::sha256(key.public_key().view());
   auto addr = Address::from_span(ByteView(h.data() + 12, 20));
   EXPECT_EQ(key.address(), addr);
}

TEST(Crypto, AeadRejectsTamperingAndWrongAssociatedData)
{
   crypto::SymmetricKey key;
   key.raw().fill(7);
   crypto::AeadNonce nonce;
   nonce.raw().fill(1);
   auto ct = crypto::aead_seal(key, nonce, as_bytes("secret"), as_bytes("ad"));
   EXPECT_EQ(ct.size(), 6u + 16u);
   auto pt = crypto::aead_open(key, nonce, ct, as_bytes("ad"));
   ASSERT_TRUE(pt);
   EXPECT_EQ(std::string(pt->begin(), pt->end()), "secret");
   EXPECT_FALSE(crypto::aead_open(key, nonce, ct, as_bytes("other")));
   ct[0] ^= 0x80;
   EXPECT_FALSE(crypto::aead_open(key, nonce, ct, as_bytes("ad")));
}

TEST(Crypto, BoxOnlyOpensForRecipient)
{
   auto a = crypto::BoxKeyPair::from_seed(seed_of(10));
   auto b = crypto::BoxKeyPair::from_seed(seed_of(11));
   auto c = crypto::BoxKeyPair::from_seed(seed_of(12));
   crypto::BoxNonce n;
   n.raw().fill(3);
   auto sealed = a.seal_to(b.public_key(), n, as_bytes("key material"));
   auto opened = b.open_from(a.public_key(), n, sealed);
   ASSERT_TRUE(opened);
   EXPECT_EQ(std::string(opened->begin(), opened->end()), "key material");
   EXPECT_FALSE(c.open_from(a.public_key(), n, sealed));
}

TEST(Rng, Mt19937_64ReferenceOutput)
{
   // The 10000th output of a default-seeded mt19937_64 is fixed by the C++ standard.
   Rng r(5489);
   std::uint64_t v = 0;
   for (int i = 0; i < 10000; ++i)
      v = r.next();
   EXPECT_EQ(v, 9981545732273789042ull);
}

TEST(Rng, DerivedStreamsAreDeterministicAndDistinct)
{
   EXPECT_EQ(derive_seed(1, "a"), derive_seed(1, "a"));
   EXPECT_NE(derive_seed(1, "a"), derive_seed(2, "a"));
   EXPECT_NE(derive_seed(1, "a"), derive_seed(1, "b"));
   EXPECT_NE(derive_seed(1, "a", Bytes{1}), derive_seed(1, "a", Bytes{2}));

   // First eight bytes, big-endian, of SHA-256(be64(master) || be32(len) || label || extra).
   Bytes pre = {0, 0, 0, 0, 0, 0, 0, 9, 0, 0, 0, 1, 'x'};
   auto  h   = crypto::sha256(pre);
   std::uint64_t expected = 0;
   for (int i = 0; i < 8; ++i)
      expected = (expected << 8) | h.raw()[i];
   EXPECT_EQ(derive_seed(9, "x"), expected);
}

TEST(Rng, UniformIntStaysInRange)
{
   Rng r(4);
   for (int i = 0; i < 10000; ++i)
   {
      auto v = r.uniform_int(-3, 5);
      ASSERT_GE(v, -3);
      ASSERT_LE(v, 5);
   }
   EXPECT_EQ(r.uniform_int(7, 7), 7);
}
