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

#include "hybridchain/consensus/messages.hpp"

#include <set>

namespace hybridchain::consensus
{
   namespace
   {
      constexpr std::string_view vote_domain = "hybridchain/ibft-vote/v1";
      constexpr std::string_view rc_domain   = "hybridchain/ibft-round-change/v1";

      Bytes vote_preimage(VoteKind kind, std::uint64_t height, std::uint64_t round,
                          const Hash& blockHash)
      {
         Encoder e;
         e.str(vote_domain).u8(static_cast<std::uint8_t>(kind)).u64(height).u64(round).fixed(
             blockHash);
         return std::move(e).take();
      }

      Bytes rc_preimage(const RoundChange& rc)
      {
         Encoder e;
         e.str(rc_domain).u64(rc.height).u64(rc.round).boolean(rc.prepared.has_value());
         if (rc.prepared)
            e.u64(rc.prepared->round).fixed(ledger::hash_block(rc.prepared->block));
         return std::move(e).take();
      }

      void encode_vote(Encoder& e, const SignedVote& v)
      {
         e.u8(static_cast<std::uint8_t>(v.kind))
             .u64(v.height)
             .u64(v.round)
             .fixed(v.blockHash)
             .fixed(v.sender)
             .bytes(v.signature);
      }

      SignedVote decode_vote(Decoder& d)
      {
         SignedVote v;
         auto       kind = d.u8();
         if (kind > 2)
            throw DecodeError("unknown vote kind");
         v.kind      = static_cast<VoteKind>(kind);
         v.height    = d.u64();
         v.round     = d.u64();
         v.blockHash = d.fixed<Hash>();
         v.sender    = d.fixed<Address>();
         v.signature = d.bytes();
         return v;
      }

      void encode_rc(Encoder& e, const RoundChange& rc)
      {
         e.u64(rc.height).u64(rc.round).boolean(rc.prepared.has_value());
         if (rc.prepared)
         {
            e.u64(rc.prepared->round);
            ledger::encode(e, rc.prepared->block);
            e.u32(static_cast<std::uint32_t>(rc.prepared->votes.size()));
            for (const auto& v : rc.prepared->votes)
               encode_vote(e, v);
         }
         e.fixed(rc.sender).bytes(rc.signature);
      }

      RoundChange decode_rc(Decoder& d)
      {
         RoundChange rc;
         rc.height = d.u64();
         rc.round  = d.u64();
         if (d.boolean())
         {
            PreparedCertificate cert;
            cert.round = d.u64();
            cert.block = ledger::decode_block(d);
            auto n     = d.u32();
            for (std::uint32_t i = 0; i < n; ++i)
               cert.votes.push_back(decode_vote(d));
            rc.prepared = std::move(cert);
         }
         rc.sender    = d.fixed<Address>();
         rc.signature = d.bytes();
         return rc;
      }
   }  // namespace

   SignedVote make_vote(VoteKind kind, std::uint64_t height, std::uint64_t round,
                        const Hash& blockHash, const crypto::SigningKey& key)
   {
      SignedVote v{kind, height, round, blockHash, key.address(), {}};
      v.signature = key.sign(vote_preimage(kind, height, round, blockHash));
      return v;
   }

   bool verify_vote(const SignedVote& v)
   {
      return crypto::verify(v.sender, vote_preimage(v.kind, v.height, v.round, v.blockHash),
                            v.signature);
   }

   bool verify_certificate(const PreparedCertificate& cert, std::uint64_t height,
                           const ValidatorSet& validators)
   {
      if (cert.block.height != height)
         return false;
      auto              hash = ledger::hash_block(cert.block);
      std::set<Address> senders;
      for (const auto& v : cert.votes)
      {
         if (v.kind == VoteKind::Commit || v.height != height || v.round != cert.round ||
             v.blockHash != hash || !validators.contains(v.sender) || !verify_vote(v))
            return false;
         if (v.kind == VoteKind::Proposal && v.sender != proposer_for(validators, height, cert.round))
            return false;
         senders.insert(v.sender);
      }
      return senders.size() >= validators.quorum();
   }

   RoundChange make_round_change(std::uint64_t height, std::uint64_t round,
                                 std::optional<PreparedCertificate> prepared,
                                 const crypto::SigningKey& key)
   {
      RoundChange rc{height, round, std::move(prepared), key.address(), {}};
      rc.signature = key.sign(rc_preimage(rc));
      return rc;
   }

   bool verify_round_change(const RoundChange& rc, const ValidatorSet& validators)
   {
      if (!validators.contains(rc.sender) || !crypto::verify(rc.sender, rc_preimage(rc), rc.signature))
         return false;
      if (rc.prepared)
         return rc.prepared->round < rc.round &&
                verify_certificate(*rc.prepared, rc.height, validators);
      return true;
   }

   std::uint64_t height_of(const ConsensusMessage& msg)
   {
      return std::visit(
          [](const auto& m) -> std::uint64_t {
             using M = std::decay_t<decltype(m)>;
             if constexpr (std::is_same_v<M, Proposal>)
                return m.height();
             else if constexpr (std::is_same_v<M, Prepare> || std::is_same_v<M, Commit>)
                return m.vote.height;
             else if constexpr (std::is_same_v<M, RoundChange>)
                return m.height;
             else
                return m.block.height;
          },
          msg);
   }

   std::string describe(const ConsensusMessage& msg)
   {
      return std::visit(
          [](const auto& m) -> std::string {
             using M = std::decay_t<decltype(m)>;
             if constexpr (std::is_same_v<M, Proposal>)
                return "preprepare h=" + std::to_string(m.height()) + " r=" +
                       std::to_string(m.round()) + " hash=" + m.proposerVote.blockHash.str().substr(0, 18);
             else if constexpr (std::is_same_v<M, Prepare>)
                return "prepare h=" + std::to_string(m.vote.height) + " r=" +
                       std::to_string(m.vote.round) + " hash=" + m.vote.blockHash.str().substr(0, 18);
             else if constexpr (std::is_same_v<M, Commit>)
                return "commit h=" + std::to_string(m.vote.height) + " r=" +
                       std::to_string(m.vote.round) + " hash=" + m.vote.blockHash.str().substr(0, 18);
             else if constexpr (std::is_same_v<M, RoundChange>)
                return "roundchange h=" + std::to_string(m.height) + " r=" + std::to_string(m.round) +
                       (m.prepared ? " prepared=" + std::to_string(m.prepared->round) : "");
             else
                return "announce h=" + std::to_string(m.block.height);
          },
          msg);
   }

   Bytes encode(const ConsensusMessage& msg)
   {
      Encoder e;
      e.u8(static_cast<std::uint8_t>(msg.index()));
      std::visit(
          [&](const auto& m) {
             using M = std::decay_t<decltype(m)>;
             if constexpr (std::is_same_v<M, Proposal>)
             {
                ledger::encode(e, m.block);
                encode_vote(e, m.proposerVote);
                e.u32(static_cast<std::uint32_t>(m.justification.size()));
                for (const auto& rc : m.justification)
                   encode_rc(e, rc);
             }
             else if constexpr (std::is_same_v<M, Prepare>)
                encode_vote(e, m.vote);
             else if constexpr (std::is_same_v<M, Commit>)
             {
                encode_vote(e, m.vote);
                e.fixed(m.seal.validator).bytes(m.seal.signature);
             }
             else if constexpr (std::is_same_v<M, RoundChange>)
                encode_rc(e, m);
             else
                ledger::encode(e, m.block);
          },
          msg);
      return std::move(e).take();
   }

   ConsensusMessage decode_consensus_message(ByteView bytes)
   {
      Decoder          d(bytes);
      ConsensusMessage out;
      switch (d.u8())
      {
         case 0:
         {
            Proposal p;
            p.block        = ledger::decode_block(d);
            p.proposerVote = decode_vote(d);
            auto n         = d.u32();
            for (std::uint32_t i = 0; i < n; ++i)
               p.justification.push_back(decode_rc(d));
            out = std::move(p);
            break;
         }
         case 1:
            out = Prepare{decode_vote(d)};
            break;
         case 2:
         {
            Commit c;
            c.vote               = decode_vote(d);
            c.seal.validator     = d.fixed<Address>();
            c.seal.signature     = d.bytes();
            out                  = std::move(c);
            break;
         }
         case 3:
            out = decode_rc(d);
            break;
         case 4:
            out = BlockAnnounce{ledger::decode_block(d)};
            break;
         default:
            throw DecodeError("unknown consensus message");
      }
      d.expect_done();
      return out;
   }
}  // namespace hybridchain::consensus
