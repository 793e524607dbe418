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

#include "hybridchain/consensus/validator_set.hpp"
#include "hybridchain/ledger/block.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hybridchain::consensus
{
   enum class VoteKind : std::uint8_t
   {
      Proposal = 0,  // the proposer's signature over its own proposal; counts as its prepare
      Prepare  = 1,
      Commit   = 2,
   };

   struct SignedVote
   {
      VoteKind      kind   = VoteKind::Prepare;
      std::uint64_t height = 0;
      std::uint64_t round  = 0;
      Hash          blockHash;
      Address       sender;
      Bytes         signature;

      friend bool operator==(const SignedVote&, const SignedVote&) = default;
   };

   SignedVote make_vote(VoteKind kind, std::uint64_t height, std::uint64_t round,
                        const Hash& blockHash, const crypto::SigningKey& key);
   bool       verify_vote(const SignedVote& vote);

   /// Quorum of Proposal/Prepare votes for one block in one round.
   struct PreparedCertificate
   {
      std::uint64_t           round = 0;
      ledger::Block           block;
      std::vector<SignedVote> votes;

      friend bool operator==(const PreparedCertificate&, const PreparedCertificate&) = default;
   };

   bool verify_certificate(const PreparedCertificate& cert, std::uint64_t height,
                           const ValidatorSet& validators);

   struct RoundChange
   {
      std::uint64_t                      height = 0;
      std::uint64_t                      round  = 0;  // the round being moved to
      std::optional<PreparedCertificate> prepared;
      Address                            sender;
      Bytes                              signature;

      friend bool operator==(const RoundChange&, const RoundChange&) = default;
   };

   RoundChange make_round_change(std::uint64_t height, std::uint64_t round,
                                 std::optional<PreparedCertificate> prepared,
                                 const crypto::SigningKey& key);
   /// Signature plus, when present, certificate validity.
   bool verify_round_change(const RoundChange& rc, const ValidatorSet& validators);

   /// PrePrepare. For rounds above 0 it carries the round-change quorum that
   /// justifies it.
   struct Proposal
   {
      ledger::Block            block;
      SignedVote               proposerVote;
      std::vector<RoundChange> justification;

      std::uint64_t height() const { return proposerVote.height; }
      std::uint64_t round() const { return proposerVote.round; }
   };

   struct Prepare
   {
      SignedVote vote;
   };

   struct Commit
   {
      SignedVote         vote;
      ledger::CommitSeal seal;
   };

   /// A finalized, sealed block pushed to peers that may have missed it.
   struct BlockAnnounce
   {
      ledger::Block block;
   };

   using ConsensusMessage = std::variant<Proposal, Prepare, Commit, RoundChange, BlockAnnounce>;

   std::uint64_t    height_of(const ConsensusMessage& msg);
   std::string      describe(const ConsensusMessage& msg);
   Bytes            encode(const ConsensusMessage& msg);
   ConsensusMessage decode_consensus_message(ByteView bytes);
}  // namespace hybridchain::consensus
