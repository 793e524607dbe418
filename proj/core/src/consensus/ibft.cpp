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

#include "hybridchain/consensus/ibft.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace hybridchain::consensus
{
   namespace
   {
      constexpr std::uint64_t announce_slot = std::numeric_limits<std::uint64_t>::max();
      constexpr std::uint64_t future_window = 8;
   }  // namespace

   std::string_view to_string(Outcome outcome)
   {
      switch (outcome)
      {
         case Outcome::Accepted:
            return "Accepted";
         case Outcome::Ignored:
            return "Ignored";
         case Outcome::WrongProposer:
            return "WrongProposer";
         case Outcome::InvalidBlock:
            return "InvalidBlock";
         case Outcome::StaleRound:
            return "StaleRound";
         case Outcome::Duplicate:
            return "Duplicate";
         case Outcome::Buffered:
            return "Buffered";
         case Outcome::BufferOverflow:
            return "BufferOverflow";
         case Outcome::SealVerifyFail:
            return "SealVerifyFail";
         case Outcome::BadSignature:
            return "BadSignature";
      }
      return "Unknown";
   }

   std::string_view to_string(Phase phase)
   {
      switch (phase)
      {
         case Phase::AwaitingProposal:
            return "AwaitingProposal";
         case Phase::Prepared:
            return "Prepared";
         case Phase::Committed:
            return "Committed";
      }
      return "Unknown";
   }

   void IbftCounters::count(Outcome outcome)
   {
      switch (outcome)
      {
         case Outcome::WrongProposer:
            ++wrongProposer;
            break;
         case Outcome::InvalidBlock:
            ++invalidBlock;
            break;
         case Outcome::StaleRound:
            ++staleRound;
            break;
         case Outcome::Duplicate:
            ++duplicate;
            break;
         case Outcome::Buffered:
            ++buffered;
            break;
         case Outcome::BufferOverflow:
            ++bufferOverflow;
            break;
         case Outcome::SealVerifyFail:
            ++sealVerifyFail;
            break;
         case Outcome::BadSignature:
            ++badSignature;
            break;
         case Outcome::Accepted:
         case Outcome::Ignored:
            break;
      }
   }

   std::optional<ledger::Block> justified_block(const std::vector<RoundChange>& quorum)
   {
      const PreparedCertificate* best = nullptr;
      for (const auto& rc : quorum)
         if (rc.prepared && (!best || rc.prepared->round > best->round))
            best = &*rc.prepared;
      if (!best)
         return std::nullopt;
      return best->block;
   }

   bool proposal_justified(const ledger::Block& block, std::uint64_t height, std::uint64_t round,
                           const std::vector<RoundChange>& rcs, const ValidatorSet& validators)
   {
      std::set<Address>            senders;
      std::optional<std::uint64_t> maxRound;
      for (const auto& rc : rcs)
      {
         if (rc.height != height || rc.round != round || !verify_round_change(rc, validators))
            return false;
         senders.insert(rc.sender);
         if (rc.prepared && (!maxRound || rc.prepared->round > *maxRound))
            maxRound = rc.prepared->round;
      }
      if (senders.size() < validators.quorum())
         return false;
      if (!maxRound)
         return block.round == round && block.proposer == proposer_for(validators, height, round);

      auto hash = ledger::hash_block(block);
      return std::any_of(rcs.begin(), rcs.end(), [&](const RoundChange& rc) {
         return rc.prepared && rc.prepared->round == *maxRound &&
                ledger::hash_block(rc.prepared->block) == hash;
      });
   }

   IbftEngine::IbftEngine(ValidatorSet validators, crypto::SigningKey key, ledger::ChainStore& chain,
                          IbftParams params, BlockBuilder build, BlockChecker check)
       : validators_(std::move(validators)),
         key_(std::move(key)),
         self_(key_.address()),
         chain_(chain),
         params_(params),
         build_(std::move(build)),
         check_(std::move(check))
   {
      if (!validators_.contains(self_))
         throw std::invalid_argument("signing key is not a validator");
   }

   std::size_t IbftEngine::prepare_count(std::uint64_t round, const Hash& hash) const
   {
      auto rs = rounds_.find(round);
      if (rs == rounds_.end())
         return 0;
      auto it = rs->second.prepares.find(hash);
      return it == rs->second.prepares.end() ? 0 : it->second.size();
   }

   std::size_t IbftEngine::commit_count(std::uint64_t round, const Hash& hash) const
   {
      auto rs = rounds_.find(round);
      if (rs == rounds_.end())
         return 0;
      auto it = rs->second.commits.find(hash);
      return it == rs->second.commits.end() ? 0 : it->second.size();
   }

   Step IbftEngine::start(Millis now)
   {
      Step step;
      begin_height(now, step.actions);
      return step;
   }

   void IbftEngine::transition(const std::string& trigger, std::vector<Action>& out)
   {
      out.push_back(Transition{height_, round_, std::string(to_string(phase_)), trigger});
   }

   void IbftEngine::begin_height(Millis now, std::vector<Action>& out)
   {
      height_ = chain_.head_height() + 1;
      round_  = 0;
      phase_  = Phase::AwaitingProposal;
      prepared_.reset();
      rounds_.clear();
      transition("start_height", out);

      if (proposer_for(validators_, height_, 0) == self_)
         out.push_back(ScheduleProposal{height_, 0,
                                        std::max(now, chain_.head().timestamp + params_.blockInterval)});
      out.push_back(ArmTimer{height_, 0, now + params_.blockInterval + params_.baseRoundTimeout});

      future_.erase(future_.begin(), future_.lower_bound(height_));
      futureCounts_.erase(futureCounts_.begin(), futureCounts_.lower_bound({height_, 0}));
      auto it = future_.find(height_);
      if (it == future_.end())
         return;
      auto replay = std::move(it->second);
      future_.erase(it);
      std::uint64_t startedAt = height_;
      for (const auto& msg : replay)
      {
         if (height_ != startedAt)
            break;
         auto step = on_message(msg, now);
         out.insert(out.end(), std::make_move_iterator(step.actions.begin()),
                    std::make_move_iterator(step.actions.end()));
      }
   }

   bool IbftEngine::buffer_future(const ConsensusMessage& msg, std::uint64_t height,
                                  std::uint64_t round)
   {
      if (height > height_ + future_window)
         return false;
      auto& count = futureCounts_[{height, round}];
      if (count >= params_.bufferFactor * validators_.size())
         return false;
      ++count;
      future_[height].push_back(msg);
      return true;
   }

   bool IbftEngine::admit_buffered(RoundState& rs)
   {
      if (rs.buffered >= params_.bufferFactor * validators_.size())
         return false;
      ++rs.buffered;
      return true;
   }

   bool IbftEngine::block_acceptable(const ledger::Block& block) const
   {
      if (block.height != height_ || block.parentHash != chain_.head_hash() ||
          block.timestamp < chain_.head().timestamp || !block.commitSeals.empty())
         return false;
      std::uint64_t gas = 0;
      for (const auto& tx : block.transactions)
         gas += tx.gasLimit;
      if (gas != block.gasUsed || gas > params_.gasLimit)
         return false;
      return !check_ || check_(block);
   }

   Step IbftEngine::on_message(const ConsensusMessage& msg, Millis now)
   {
      Step step = std::visit(
          [&](const auto& m) -> Step {
             using M = std::decay_t<decltype(m)>;
             if constexpr (std::is_same_v<M, Proposal>)
                return handle_proposal(m, now);
             else if constexpr (std::is_same_v<M, Prepare>)
                return handle_prepare(m.vote, now);
             else if constexpr (std::is_same_v<M, Commit>)
                return handle_commit(m, now);
             else if constexpr (std::is_same_v<M, RoundChange>)
                return handle_round_change(m, now);
             else
                return handle_announce(m.block, now);
          },
          msg);
      counters_.count(step.outcome);
      return step;
   }

   Step IbftEngine::handle_proposal(const Proposal& p, Millis now)
   {
      Step step;
      auto h = p.height();
      auto r = p.round();
      if (h < height_)
         return {Outcome::StaleRound, {}};
      if (h > height_)
         return {buffer_future(p, h, r) ? Outcome::Buffered : Outcome::BufferOverflow, {}};
      if (r < round_)
         return {Outcome::StaleRound, {}};
      if (p.proposerVote.kind != VoteKind::Proposal || p.block.height != h)
         return {Outcome::InvalidBlock, {}};
      if (p.proposerVote.sender != proposer_for(validators_, h, r))
         return {Outcome::WrongProposer, {}};
      if (!verify_vote(p.proposerVote))
         return {Outcome::BadSignature, {}};
      auto hash = ledger::hash_block(p.block);
      if (hash != p.proposerVote.blockHash)
         return {Outcome::InvalidBlock, {}};

      if (auto it = rounds_.find(r); it != rounds_.end() && it->second.proposal)
         return {it->second.proposalHash == hash ? Outcome::Duplicate : Outcome::InvalidBlock, {}};

      if (!block_acceptable(p.block))
         return {Outcome::InvalidBlock, {}};
      if (r == 0)
      {
         if (p.block.round != 0 || p.block.proposer != p.proposerVote.sender)
            return {Outcome::InvalidBlock, {}};
      }
      else if (!proposal_justified(p.block, h, r, p.justification, validators_))
         return {Outcome::InvalidBlock, {}};

      if (r > round_)
         enter_round(r, now, "justified_preprepare", step.actions);
      accept_proposal(p, now, step.actions);
      return step;
   }

   void IbftEngine::accept_proposal(const Proposal& p, Millis now, std::vector<Action>& out)
   {
      auto  r    = p.round();
      auto& rs   = rounds_[r];
      auto  hash = p.proposerVote.blockHash;
      rs.proposal     = p;
      rs.proposalHash = hash;
      rs.prepares[hash][p.proposerVote.sender] = p.proposerVote;
      if (p.proposerVote.sender != self_)
      {
         auto vote = make_vote(VoteKind::Prepare, height_, r, hash, key_);
         out.push_back(Send{Prepare{vote}, {}});
         rs.prepares[hash][self_] = vote;
      }

      std::size_t unmatched = 0;
      for (const auto& [h, votes] : rs.prepares)
         if (h != hash)
            unmatched += votes.size();
      for (const auto& [h, votes] : rs.commits)
         if (h != hash)
            unmatched += votes.size();
      rs.buffered = unmatched;

      transition("preprepare", out);
      try_advance(r, now, out);
   }

   void IbftEngine::try_advance(std::uint64_t round, Millis now, std::vector<Action>& out)
   {
      if (round != round_)
         return;
      auto it = rounds_.find(round);
      if (it == rounds_.end() || !it->second.proposal)
         return;
      auto&       rs   = it->second;
      const auto& hash = rs.proposalHash;
      auto        q    = validators_.quorum();

      if (!rs.commitSent && rs.prepares[hash].size() >= q)
      {
         PreparedCertificate cert{round, rs.proposal->block, {}};
         for (const auto& [_, v] : rs.prepares[hash])
            cert.votes.push_back(v);
         prepared_ = std::move(cert);
         phase_    = Phase::Prepared;
         transition("prepare_quorum", out);

         Commit c{make_vote(VoteKind::Commit, height_, round, hash, key_),
                  ledger::make_commit_seal(hash, key_)};
         out.push_back(Send{c, {}});
         rs.commits[hash][self_] = std::move(c);
         rs.commitSent           = true;
      }

      auto& commits = rs.commits[hash];
      if (commits.size() >= q)
      {
         auto block = rs.proposal->block;
         for (const auto& member : validators_.members())
            if (auto c = commits.find(member); c != commits.end())
               block.commitSeals.push_back(c->second.seal);
         finalize(std::move(block), hash, now, "commit_quorum", out);
      }
   }

   void IbftEngine::finalize(ledger::Block block, const Hash& hash, Millis now,
                             const std::string& trigger, std::vector<Action>& out)
   {
      chain_.append_block(block, validators_);
      phase_ = Phase::Committed;
      transition(trigger, out);
      out.push_back(Finalized{block.height, hash});
      out.push_back(Send{BlockAnnounce{std::move(block)}, {}});
      begin_height(now, out);
   }

   Step IbftEngine::handle_prepare(const SignedVote& v, Millis now)
   {
      if (v.kind != VoteKind::Prepare)
         return {Outcome::Ignored, {}};
      if (!validators_.contains(v.sender) || !verify_vote(v))
         return {Outcome::BadSignature, {}};
      if (v.height < height_)
         return {Outcome::StaleRound, {}};
      if (v.height > height_)
         return {buffer_future(Prepare{v}, v.height, v.round) ? Outcome::Buffered
                                                               : Outcome::BufferOverflow,
                 {}};
      if (v.round < round_)
         return {Outcome::StaleRound, {}};

      auto& rs = rounds_[v.round];
      if (auto it = rs.prepares.find(v.blockHash);
          it != rs.prepares.end() && it->second.contains(v.sender))
         return {Outcome::Duplicate, {}};

      bool matches = v.round == round_ && rs.proposal && rs.proposalHash == v.blockHash;
      if (!matches)
      {
         if (!admit_buffered(rs))
            return {Outcome::BufferOverflow, {}};
         rs.prepares[v.blockHash][v.sender] = v;
         return {Outcome::Buffered, {}};
      }
      Step step;
      rs.prepares[v.blockHash][v.sender] = v;
      try_advance(v.round, now, step.actions);
      return step;
   }

   Step IbftEngine::handle_commit(const Commit& c, Millis now)
   {
      const auto& v = c.vote;
      if (v.kind != VoteKind::Commit)
         return {Outcome::Ignored, {}};
      if (!validators_.contains(v.sender) || !verify_vote(v))
         return {Outcome::BadSignature, {}};
      if (c.seal.validator != v.sender || !ledger::verify_commit_seal(v.blockHash, c.seal))
         return {Outcome::SealVerifyFail, {}};
      if (v.height < height_)
         return {Outcome::StaleRound, {}};
      if (v.height > height_)
         return {buffer_future(c, v.height, v.round) ? Outcome::Buffered : Outcome::BufferOverflow,
                 {}};
      if (v.round < round_)
         return {Outcome::StaleRound, {}};

      auto& rs = rounds_[v.round];
      if (auto it = rs.commits.find(v.blockHash);
          it != rs.commits.end() && it->second.contains(v.sender))
         return {Outcome::Duplicate, {}};

      bool matches = v.round == round_ && rs.proposal && rs.proposalHash == v.blockHash;
      if (!matches)
      {
         if (!admit_buffered(rs))
            return {Outcome::BufferOverflow, {}};
         rs.commits[v.blockHash][v.sender] = c;
         return {Outcome::Buffered, {}};
      }
      Step step;
      rs.commits[v.blockHash][v.sender] = c;
      try_advance(v.round, now, step.actions);
      return step;
   }

   Step IbftEngine::handle_round_change(const RoundChange& rc, Millis now)
   {
      if (rc.height < height_)
         return {Outcome::StaleRound, {}};
      if (rc.round == 0)
         return {Outcome::Ignored, {}};
      if (!verify_round_change(rc, validators_))
         return {Outcome::BadSignature, {}};
      if (rc.height > height_)
         return {buffer_future(rc, rc.height, rc.round) ? Outcome::Buffered
                                                         : Outcome::BufferOverflow,
                 {}};
      if (rc.round < round_)
         return {Outcome::StaleRound, {}};

      auto& rcs = rounds_[rc.round].roundChanges;
      if (rcs.contains(rc.sender))
         return {Outcome::Duplicate, {}};
      rcs.emplace(rc.sender, rc);

      Step step;
      // A round that f + 1 validators have moved past cannot be completed
      // without at least one honest node, so follow them.
      std::map<Address, std::uint64_t> highest;
      for (const auto& [round, rs] : rounds_)
         if (round > round_)
            for (const auto& [sender, _] : rs.roundChanges)
               highest[sender] = std::max(highest[sender], round);
      if (highest.size() >= validators_.f() + 1)
      {
         std::vector<std::uint64_t> rounds;
         for (const auto& [_, r] : highest)
            rounds.push_back(r);
         std::sort(rounds.rbegin(), rounds.rend());
         auto target = rounds[validators_.f()];
         auto own    = make_round_change(height_, target, prepared_, key_);
         step.actions.push_back(Send{own, {}});
         rounds_[target].roundChanges.emplace(self_, std::move(own));
         enter_round(target, now, "round_change_catch_up", step.actions);
      }
      else
         maybe_propose_after_round_change(now, step.actions);
      return step;
   }

   void IbftEngine::enter_round(std::uint64_t round, Millis now, const std::string& trigger,
                                std::vector<Action>& out)
   {
      round_ = round;
      phase_ = Phase::AwaitingProposal;
      ++counters_.roundChanges;
      transition(trigger, out);
      out.push_back(ArmTimer{height_, round, now + (params_.baseRoundTimeout << round)});
      maybe_propose_after_round_change(now, out);
   }

   void IbftEngine::maybe_propose_after_round_change(Millis now, std::vector<Action>& out)
   {
      if (round_ == 0 || proposer_for(validators_, height_, round_) != self_)
         return;
      auto& rs = rounds_[round_];
      if (rs.proposed || rs.roundChanges.size() < validators_.quorum())
         return;
      propose(now, out);
   }

   Step IbftEngine::on_propose_due(std::uint64_t height, std::uint64_t round, Millis now)
   {
      if (height != height_ || round != round_ || proposer_for(validators_, height, round) != self_ ||
          rounds_[round].proposed)
         return {Outcome::Ignored, {}};
      Step step;
      propose(now, step.actions);
      return step;
   }

   void IbftEngine::propose(Millis now, std::vector<Action>& out)
   {
      auto&                    rs = rounds_[round_];
      std::vector<RoundChange> justification;
      std::optional<ledger::Block> block;
      rs.proposed = true;
      if (round_ > 0)
      {
         for (const auto& [_, rc] : rs.roundChanges)
            justification.push_back(rc);
         block = justified_block(justification);
      }
      if (!block)
         block = build_(ledger::BlockTemplate{height_, round_, self_, chain_.head_hash(),
                                              std::max(now, chain_.head().timestamp),
                                              params_.gasLimit});
      auto     hash = ledger::hash_block(*block);
      Proposal p{std::move(*block), make_vote(VoteKind::Proposal, height_, round_, hash, key_),
                 std::move(justification)};
      out.push_back(Send{p, {}});
      accept_proposal(p, now, out);
   }

   Step IbftEngine::on_round_timeout(std::uint64_t height, std::uint64_t round, Millis now)
   {
      if (height != height_ || round != round_)
         return {Outcome::Ignored, {}};
      Step step;
      auto next = round + 1;
      auto rc   = make_round_change(height_, next, prepared_, key_);
      step.actions.push_back(Send{rc, {}});
      rounds_[next].roundChanges.emplace(self_, std::move(rc));
      enter_round(next, now, "timeout", step.actions);
      return step;
   }

   Step IbftEngine::handle_announce(const ledger::Block& block, Millis now)
   {
      auto h = block.height;
      if (h == 0)
         return {Outcome::Ignored, {}};
      if (h <= chain_.head_height())
      {
         auto hash = ledger::hash_block(block);
         if (hash == chain_.hash_at(h))
            return {Outcome::Duplicate, {}};
         if (ledger::check_seals(block, hash, validators_))
            return {Outcome::SealVerifyFail, {}};
         return {Outcome::Accepted, {SafetyViolation{h, chain_.hash_at(h), hash}}};
      }
      if (h > height_)
         return {buffer_future(BlockAnnounce{block}, h, announce_slot) ? Outcome::Buffered
                                                                       : Outcome::BufferOverflow,
                 {}};
      auto hash = ledger::hash_block(block);
      if (ledger::check_seals(block, hash, validators_))
         return {Outcome::SealVerifyFail, {}};
      if (block.parentHash != chain_.head_hash())
         return {Outcome::InvalidBlock, {}};
      Step step;
      finalize(block, hash, now, "announce", step.actions);
      return step;
   }
}  // namespace hybridchain::consensus
