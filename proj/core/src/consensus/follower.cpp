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

#include "hybridchain/consensus/follower.hpp"

namespace hybridchain::consensus
{
   namespace
   {
      constexpr std::uint64_t follower_window = 8;
   }

   Follower::Follower(ValidatorSet validators, ledger::ChainStore& chain)
       : validators_(std::move(validators)), chain_(chain)
   {
   }

   Step Follower::start(Millis)
   {
      return {Outcome::Accepted, {}};
   }

   bool Follower::within_window(std::uint64_t height) const
   {
      return height > chain_.head_height() && height <= chain_.head_height() + follower_window;
   }

   Step Follower::on_message(const ConsensusMessage& msg, Millis)
   {
      Step step;
      step.outcome = handle(msg, step.actions);
      counters_.count(step.outcome);
      if (step.outcome == Outcome::Accepted)
         drain(step.actions);
      return step;
   }

   Outcome Follower::handle(const ConsensusMessage& msg, std::vector<Action>& out)
   {
      if (const auto* p = std::get_if<Proposal>(&msg))
      {
         const auto& v = p->proposerVote;
         if (!within_window(v.height))
            return Outcome::StaleRound;
         if (v.kind != VoteKind::Proposal || p->block.height != v.height)
            return Outcome::InvalidBlock;
         if (v.sender != proposer_for(validators_, v.height, v.round))
            return Outcome::WrongProposer;
         if (!verify_vote(v) || ledger::hash_block(p->block) != v.blockHash)
            return Outcome::BadSignature;
         auto& bodies = pending_[v.height].bodies;
         if (bodies.contains(v.blockHash))
            return Outcome::Duplicate;
         bodies.emplace(v.blockHash, p->block);
         return Outcome::Accepted;
      }
      if (const auto* c = std::get_if<Commit>(&msg))
      {
         const auto& v = c->vote;
         if (!within_window(v.height))
            return Outcome::StaleRound;
         if (v.kind != VoteKind::Commit || !validators_.contains(v.sender) || !verify_vote(v))
            return Outcome::BadSignature;
         if (c->seal.validator != v.sender || !ledger::verify_commit_seal(v.blockHash, c->seal))
            return Outcome::SealVerifyFail;
         auto& seals = pending_[v.height].seals[v.blockHash];
         if (seals.contains(v.sender))
            return Outcome::Duplicate;
         seals.emplace(v.sender, c->seal);
         return Outcome::Accepted;
      }
      if (const auto* a = std::get_if<BlockAnnounce>(&msg))
      {
         const auto& block = a->block;
         if (block.height == 0)
            return Outcome::Ignored;
         auto hash = ledger::hash_block(block);
         if (block.height <= chain_.head_height())
         {
            if (hash == chain_.hash_at(block.height))
               return Outcome::Duplicate;
            if (ledger::check_seals(block, hash, validators_))
               return Outcome::SealVerifyFail;
            out.push_back(SafetyViolation{block.height, chain_.hash_at(block.height), hash});
            return Outcome::Ignored;
         }
         if (!within_window(block.height))
            return Outcome::BufferOverflow;
         if (ledger::check_seals(block, hash, validators_))
            return Outcome::SealVerifyFail;
         auto& pending = pending_[block.height];
         auto  body    = block;
         body.commitSeals.clear();
         pending.bodies.emplace(hash, std::move(body));
         auto& seals = pending.seals[hash];
         for (const auto& s : block.commitSeals)
            seals.emplace(s.validator, s);
         return Outcome::Accepted;
      }
      return Outcome::Ignored;
   }

   void Follower::drain(std::vector<Action>& out)
   {
      for (;;)
      {
         auto next = chain_.head_height() + 1;
         auto it   = pending_.find(next);
         if (it == pending_.end())
            return;
         bool advanced = false;
         for (const auto& [hash, seals] : it->second.seals)
         {
            if (seals.size() < validators_.quorum())
               continue;
            auto body = it->second.bodies.find(hash);
            if (body == it->second.bodies.end() || body->second.parentHash != chain_.head_hash())
               continue;
            auto block = body->second;
            for (const auto& member : validators_.members())
               if (auto s = seals.find(member); s != seals.end())
                  block.commitSeals.push_back(s->second);
            chain_.append_block(std::move(block), validators_);
            out.push_back(Transition{next, chain_.head().round, "Committed", "commit_quorum"});
            out.push_back(Finalized{next, hash});
            advanced = true;
            break;
         }
         if (!advanced)
            return;
         pending_.erase(pending_.begin(), pending_.upper_bound(next));
      }
   }
}  // namespace hybridchain::consensus
