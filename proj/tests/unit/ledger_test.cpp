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
#include "hybridchain/ledger/chain_store.hpp"
#include "hybridchain/ledger/tx_pool.hpp"
#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace hybridchain;
using namespace hybridchain::ledger;
using hybridchain::fixtures::key_of;
using hybridchain::fixtures::public_tx;

namespace
{
   Transaction reg(std::uint64_t who, std::uint64_t nonce = 0, std::uint64_t gas = 41'000)
   {
      return public_tx(who, nonce, "RegistrationAD", "register", contracts::encode(contracts::RegisterArgs{}), gas);
   }

   struct Validators
   {
      std::vector<crypto::SigningKey> keys;
      consensus::ValidatorSet         set;

      Validators() : keys{key_of(100), key_of(101), key_of(102), key_of(103)}, set(addresses(keys)) {}

      static std::vector<Address> addresses(const std::vector<crypto::SigningKey>& ks)
      {
         std::vector<Address> out;
         for (const auto& k : ks)
            out.push_back(k.address());
         return out;
      }

      Block sealed_child(const ChainStore& chain, std::size_t seals)
      {
         Block b;
         b.height     = chain.head_height() + 1;
         b.proposer   = keys[b.height % 4].address();
         b.parentHash = chain.head_hash();
         b.timestamp  = static_cast<Millis>(b.height) * 5000;
         auto h       = hash_block(b);
         for (std::size_t i = 0; i < seals; ++i)
            b.commitSeals.push_back(make_commit_seal(h, keys[i]));
         return b;
      }
   };
}  // namespace

TEST(Transaction, SealVerifyAndEncodingRoundTrip)
{
   auto tx = reg(1);
   EXPECT_TRUE(verify_transaction(tx));
   EXPECT_EQ(tx.txId, compute_tx_id(tx));
   auto bytes = encode(tx);
   Decoder d(bytes);
   EXPECT_EQ(decode_transaction(d), tx);

   auto tampered = tx;
   tampered.nonce = 5;
   EXPECT_FALSE(verify_transaction(tampered));
   auto priced     = tx;
   priced.gasPrice = 1;
   EXPECT_FALSE(verify_transaction(priced));
}

TEST(Transaction, MarkerHasNoPayloadBytes)
{
   Transaction tx;
   tx.sender = key_of(1).address();
   tx.kind   = PrivacyMarker{fixtures::hash_of("g"), fixtures::hash_of("p"), std::nullopt};
   seal(tx, key_of(1));
   EXPECT_TRUE(tx.is_marker());
   EXPECT_TRUE(verify_transaction(tx));
}

TEST(TxPool, FifoOrderWithTxIdTieBreak)
{
   TxPool pool;
   auto   a = reg(1), b = reg(2), c = reg(3);
   pool.add(c, 10);
   pool.add(a, 5);
   pool.add(b, 5);
   EXPECT_FALSE(pool.add(a, 7));
   auto snap = pool.snapshot();
   ASSERT_EQ(snap.size(), 3u);
   EXPECT_EQ(snap[2].txId, c.txId);
   EXPECT_LT(snap[0].txId, snap[1].txId);
}

TEST(TxPool, GreedyPackingStopsAtFirstMisfit)
{
   TxPool pool;
   pool.add(reg(1, 0, 41'000), 0);
   pool.add(reg(2, 0, 61'000), 1);
   pool.add(reg(3, 0, 10'000), 2);
   BlockTemplate t;
   t.gasLimit = 100'000;
   auto block = build_block(pool, t);
   // 41k fits, 41k+61k exceeds; the 10k transaction behind it waits.
   ASSERT_EQ(block.transactions.size(), 1u);
   EXPECT_EQ(block.gasUsed, 41'000u);
   EXPECT_EQ(pool.size(), 3u);
   pool.remove_included(block);
   EXPECT_EQ(pool.size(), 2u);
}

TEST(TxPool, OversizedTransactionDroppedAfterAttempts)
{
   TxPool pool;
   pool.add(reg(1, 0, 200'000), 0);
   pool.add(reg(2), 1);
   BlockTemplate t;
   t.gasLimit = 100'000;
   for (int i = 0; i < oversized_attempt_limit; ++i)
   {
      auto block = build_block(pool, t);
      EXPECT_EQ(block.transactions.size(), 1u);
   }
   auto dropped = pool.take_dropped();
   ASSERT_EQ(dropped.size(), 1u);
   EXPECT_EQ(dropped[0].gasLimit, 200'000u);
   EXPECT_EQ(pool.size(), 1u);
}

TEST(TxPool, NonceGatingSkipsGapsAndEvictsStale)
{
   TxPool pool;
   auto   stale = reg(1, 0);
   auto   next  = public_tx(1, 1, "AddService", "publish_service", {}, 61'000);
   auto   gap   = public_tx(1, 3, "AddService", "publish_service", {}, 61'000);
   pool.add(stale, 0);
   pool.add(gap, 1);
   pool.add(next, 2);
   BlockTemplate t;
   t.gasLimit  = 8'000'000;
   auto block  = build_block(pool, t, [](const Address&) { return std::uint64_t{1}; });
   ASSERT_EQ(block.transactions.size(), 1u);
   EXPECT_EQ(block.transactions[0].txId, next.txId);
   EXPECT_FALSE(pool.contains(stale.txId));
   EXPECT_TRUE(pool.contains(gap.txId));
}

TEST(ChainStore, GenesisAndAppend)
{
   Validators v;
   ChainStore chain(make_genesis(v.set));
   EXPECT_EQ(chain.head_height(), 0u);
   EXPECT_TRUE(chain.head().parentHash.is_zero());
   auto b = v.sealed_child(chain, 3);
   chain.append_block(b, v.set);
   EXPECT_EQ(chain.head_height(), 1u);
   EXPECT_EQ(chain.head_hash(), hash_block(b));
}

TEST(ChainStore, RejectsBadBlocks)
{
   Validators v;
   ChainStore chain(make_genesis(v.set));
   auto       expect_code = [&](Block b, ChainErrorCode code) {
      try
      {
         chain.append_block(std::move(b), v.set);
         ADD_FAILURE() << "append succeeded, expected " << to_string(code);
      }
      catch (const ChainError& e)
      {
         EXPECT_EQ(e.code, code) << e.what();
      }
   };

   expect_code(v.sealed_child(chain, 2), ChainErrorCode::InsufficientSeals);

   auto gap   = v.sealed_child(chain, 3);
   gap.height = 2;
   expect_code(gap, ChainErrorCode::HeightGap);

   auto orphan       = v.sealed_child(chain, 0);
   orphan.parentHash = fixtures::hash_of("elsewhere");
   auto h            = hash_block(orphan);
   for (int i = 0; i < 3; ++i)
      orphan.commitSeals.push_back(make_commit_seal(h, v.keys[i]));
   expect_code(orphan, ChainErrorCode::ParentMismatch);

   auto stranger = v.sealed_child(chain, 2);
   stranger.commitSeals.push_back(make_commit_seal(hash_block(stranger), key_of(999)));
   expect_code(stranger, ChainErrorCode::UnknownValidatorSeal);

   auto forged                        = v.sealed_child(chain, 3);
   forged.commitSeals[1].signature[50] ^= 1;
   expect_code(forged, ChainErrorCode::InvalidSeal);

   auto good = v.sealed_child(chain, 3);
   chain.append_block(good, v.set);
   expect_code(good, ChainErrorCode::DuplicateHeight);
   EXPECT_EQ(chain.head_height(), 1u);
}

TEST(ChainStore, FindsTransactions)
{
   Validators v;
   ChainStore chain(make_genesis(v.set));
   Block      b;
   b.height     = 1;
   b.parentHash = chain.head_hash();
   b.transactions.push_back(reg(1));
   b.transactions.push_back(reg(2));
   auto h = hash_block(b);
   for (int i = 0; i < 3; ++i)
      b.commitSeals.push_back(make_commit_seal(h, v.keys[i]));
   chain.append_block(b, v.set);
   auto loc = chain.find_tx(b.transactions[1].txId);
   ASSERT_TRUE(loc);
   EXPECT_EQ(loc->height, 1u);
   EXPECT_EQ(loc->position, 1u);
   EXPECT_FALSE(chain.find_tx(fixtures::hash_of("none")));
}

TEST(Block, HashExcludesSealsAndEncodingRoundTrips)
{
   Validators v;
   ChainStore chain(make_genesis(v.set));
   auto       b = v.sealed_child(chain, 3);
   auto       unsealed = b;
   unsealed.commitSeals.clear();
   EXPECT_EQ(hash_block(b), hash_block(unsealed));
   auto    bytes = encode(b);
   Decoder d(bytes);
   EXPECT_EQ(decode_block(d), b);
}
