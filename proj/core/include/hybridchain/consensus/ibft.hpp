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

#include "hybridchain/consensus/messages.hpp"
#include "hybridchain/ledger/chain_store.hpp"
#include "hybridchain/ledger/tx_pool.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hybridchain::consensus
{
   struct IbftParams
   {
      Millis        blockInterval    = 5000;
      Millis        baseRoundTimeout = 10000;
      std::uint64_t gasLimit         = 8'000'000;
      /// Buffered votes per (height, round) are capped at this multiple of n.
      std::size_t bufferFactor = 4;
   };

   /// Result of handling one input.
   enum class Outcome
   {
      Accepted,
      Ignored,
      WrongProposer,
      InvalidBlock,
      StaleRound,
      Duplicate,
      Buffered,
      BufferOverflow,
      SealVerifyFail,
      BadSignature,
   };

   std::string_view to_string(Outcome outcome);

   struct IbftCounters
   {
      std::uint64_t wrongProposer  = 0;
      std::uint64_t invalidBlock   = 0;
      std::uint64_t staleRound     = 0;
      std::uint64_t duplicate      = 0;
      std::uint64_t buffered       = 0;
      std::uint64_t bufferOverflow = 0;
      std::uint64_t sealVerifyFail = 0;
      std::uint64_t badSignature   = 0;
      std::uint64_t roundChanges   = 0;  // rounds entered above 0

      void count(Outcome outcome);
   };

   /// Outbound message. An empty recipient list means every other node.
   struct Send
   {
      ConsensusMessage    msg;
      std::vector<NodeId> to;
   };

   struct ScheduleProposal
   {
      std::uint64_t height = 0;
      std::uint64_t round  = 0;
      Millis        at     = 0;
   };

   struct ArmTimer
   {
      std::uint64_t height = 0;
      std::uint64_t round  = 0;
      Millis        at     = 0;
   };

   /// The block is now the chain head.
   struct Finalized
   {
      std::uint64_t height = 0;
      Hash          hash;
   };

   struct Transition
   {
      std::uint64_t height = 0;
      std::uint64_t round  = 0;
      std::string   phase;
      std::string   trigger;
   };

   /// A quorum-sealed block conflicts with one already finalized locally.
   struct SafetyViolation
   {
      std::uint64_t height = 0;
      Hash          finalized;
      Hash          conflicting;
   };

   using Action = std::variant<Send, ScheduleProposal, ArmTimer, Finalized, Transition, SafetyViolation>;

   struct Step
   {
      Outcome             outcome = Outcome::Accepted;
      std::vector<Action> actions;
   };

   /// Common driver interface for honest validators, Byzantine validators and
   /// passive followers.
   class Participant
   {
     public:
      virtual ~Participant() = default;

      /// Begins the height after the current chain head.
      virtual Step start(Millis now)                                                    = 0;
      virtual Step on_message(const ConsensusMessage& msg, Millis now)                  = 0;
      virtual Step on_propose_due(std::uint64_t height, std::uint64_t round, Millis now) = 0;
      virtual Step on_round_timeout(std::uint64_t height, std::uint64_t round, Millis now) = 0;

      virtual const IbftCounters& counters() const = 0;
   };

   using BlockBuilder = std::function<ledger::Block(const ledger::BlockTemplate&)>;
   /// Transaction-level validity (signatures, nonces) of a proposed block.
   using BlockChecker = std::function<bool(const ledger::Block&)>;

   /// Block that a round-change quorum obliges the next proposer to re-propose:
   /// the one in the highest-round prepared certificate, if any carries one.
   /// Ties at the highest round resolve to the first certificate in order.
   std::optional<ledger::Block> justified_block(const std::vector<RoundChange>& quorum);

   /// True when `rcs` holds at least a quorum of valid round changes from
   /// distinct validators for (height, round) and `block` is consistent with
   /// their highest prepared certificate (any certificate at that round).
   bool proposal_justified(const ledger::Block& block, std::uint64_t height, std::uint64_t round,
                           const std::vector<RoundChange>& rcs, const ValidatorSet& validators);

   enum class Phase
   {
      AwaitingProposal,
      Prepared,
      Committed,
   };

   std::string_view to_string(Phase phase);

   /// Honest IBFT 2.0 validator state machine. All inputs carry the virtual
   /// time; outputs are returned as actions for the driver to execute. The
   /// engine appends finalized blocks to the chain it is given.
   class IbftEngine : public Participant
   {
     public:
      IbftEngine(ValidatorSet validators, crypto::SigningKey key, ledger::ChainStore& chain,
                 IbftParams params, BlockBuilder build, BlockChecker check = {});

      Step start(Millis now) override;
      Step on_message(const ConsensusMessage& msg, Millis now) override;
      Step on_propose_due(std::uint64_t height, std::uint64_t round, Millis now) override;
      Step on_round_timeout(std::uint64_t height, std::uint64_t round, Millis now) override;

      const IbftCounters& counters() const override { return counters_; }

      std::uint64_t             height() const { return height_; }
      std::uint64_t             round() const { return round_; }
      Phase                     phase() const { return phase_; }
      const ValidatorSet&       validators() const { return validators_; }
      const crypto::SigningKey& key() const { return key_; }
      const IbftParams&         params() const { return params_; }
      const ledger::ChainStore& chain() const { return chain_; }
      const std::optional<PreparedCertificate>& prepared() const { return prepared_; }

      /// Distinct prepare senders recorded for a hash in the current height.
      std::size_t prepare_count(std::uint64_t round, const Hash& hash) const;
      std::size_t commit_count(std::uint64_t round, const Hash& hash) const;

     private:
      struct RoundState
      {
         std::optional<Proposal>                        proposal;
         Hash                                           proposalHash;
         std::map<Hash, std::map<Address, SignedVote>>  prepares;
         std::map<Hash, std::map<Address, Commit>>      commits;
         std::map<Address, RoundChange>                 roundChanges;
         std::size_t                                    buffered    = 0;
         bool                                           proposed    = false;
         bool                                           commitSent  = false;
      };

      Step handle_proposal(const Proposal& p, Millis now);
      Step handle_prepare(const SignedVote& v, Millis now);
      Step handle_commit(const Commit& c, Millis now);
      Step handle_round_change(const RoundChange& rc, Millis now);
      Step handle_announce(const ledger::Block& block, Millis now);

      /// Structural checks shared by every proposal.
      bool block_acceptable(const ledger::Block& block) const;
      bool buffer_future(const ConsensusMessage& msg, std::uint64_t height, std::uint64_t round);
      bool admit_buffered(RoundState& rs);

      void begin_height(Millis now, std::vector<Action>& out);
      void enter_round(std::uint64_t round, Millis now, const std::string& trigger,
                       std::vector<Action>& out);
      void propose(Millis now, std::vector<Action>& out);
      void accept_proposal(const Proposal& p, Millis now, std::vector<Action>& out);
      void maybe_propose_after_round_change(Millis now, std::vector<Action>& out);
      void try_advance(std::uint64_t round, Millis now, std::vector<Action>& out);
      void finalize(ledger::Block block, const Hash& hash, Millis now, const std::string& trigger,
                    std::vector<Action>& out);
      void transition(const std::string& trigger, std::vector<Action>& out);

      ValidatorSet        validators_;
      crypto::SigningKey  key_;
      Address             self_;
      ledger::ChainStore& chain_;
      IbftParams          params_;
      BlockBuilder        build_;
      BlockChecker        check_;

      std::uint64_t                      height_ = 0;
      std::uint64_t                      round_  = 0;
      Phase                              phase_  = Phase::AwaitingProposal;
      std::optional<PreparedCertificate> prepared_;
      std::map<std::uint64_t, RoundState> rounds_;
      std::map<std::uint64_t, std::vector<ConsensusMessage>> future_;
      std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> futureCounts_;
      IbftCounters                       counters_;
   };
}  // namespace hybridchain::consensus
