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

#include "hybridchain/consensus/byzantine.hpp"

#include <algorithm>

namespace hybridchain::consensus
{
   ByzantineEngine::ByzantineEngine(std::unique_ptr<IbftEngine> inner, ByzantineBehavior behavior,
                                    std::vector<NodeId> validatorPeers,
                                    std::vector<NodeId> otherPeers)
       : inner_(std::move(inner)),
         behavior_(behavior),
         validatorPeers_(std::move(validatorPeers)),
         otherPeers_(std::move(otherPeers))
   {
   }

   Step ByzantineEngine::start(Millis now) { return rewrite(inner_->start(now)); }

   Step ByzantineEngine::on_propose_due(std::uint64_t height, std::uint64_t round, Millis now)
   {
      return rewrite(inner_->on_propose_due(height, round, now));
   }

   Step ByzantineEngine::on_round_timeout(std::uint64_t height, std::uint64_t round, Millis now)
   {
      return rewrite(inner_->on_round_timeout(height, round, now));
   }

   Step ByzantineEngine::on_message(const ConsensusMessage& msg, Millis now)
   {
      std::vector<Action> extra;
      if (behavior_.doubleVote)
      {
         if (const auto* p = std::get_if<Proposal>(&msg))
            vote_for(p->height(), p->round(), p->proposerVote.blockHash, extra);
         else if (const auto* v = std::get_if<Prepare>(&msg))
            vote_for(v->vote.height, v->vote.round, v->vote.blockHash, extra);
         else if (const auto* c = std::get_if<Commit>(&msg))
            vote_for(c->vote.height, c->vote.round, c->vote.blockHash, extra);
      }
      auto step = rewrite(inner_->on_message(msg, now));
      step.actions.insert(step.actions.begin(), std::make_move_iterator(extra.begin()),
                          std::make_move_iterator(extra.end()));
      return step;
   }

   void ByzantineEngine::vote_for(std::uint64_t height, std::uint64_t round, const Hash& hash,
                                  std::vector<Action>& out)
   {
      if (height != inner_->height() || !voted_.emplace(height, round, hash).second)
         return;
      const auto& key = inner_->key();
      out.push_back(Send{Prepare{make_vote(VoteKind::Prepare, height, round, hash, key)}, {}});
      out.push_back(Send{Commit{make_vote(VoteKind::Commit, height, round, hash, key),
                                ledger::make_commit_seal(hash, key)},
                         {}});
   }

   Step ByzantineEngine::rewrite(Step step)
   {
      std::vector<Action> out;
      const auto&         self = inner_->key().address();
      for (auto& action : step.actions)
      {
         auto* send = std::get_if<Send>(&action);
         if (!send)
         {
            out.push_back(std::move(action));
            continue;
         }
         if (auto* p = std::get_if<Proposal>(&send->msg);
             p && behavior_.equivocate && p->proposerVote.sender == self)
         {
            auto alt = p->block;
            alt.timestamp += 1;
            auto     altHash = ledger::hash_block(alt);
            Proposal altProposal{alt,
                                 make_vote(VoteKind::Proposal, p->height(), p->round(), altHash,
                                           inner_->key()),
                                 p->justification};
            std::size_t         half = (validatorPeers_.size() + 1) / 2;
            std::vector<NodeId> first(validatorPeers_.begin(), validatorPeers_.begin() + half);
            std::vector<NodeId> second(validatorPeers_.begin() + half, validatorPeers_.end());
            first.insert(first.end(), otherPeers_.begin(), otherPeers_.end());
            out.push_back(Send{*p, std::move(first)});
            if (!second.empty())
               out.push_back(Send{std::move(altProposal), std::move(second)});
            continue;
         }
         if (behavior_.withholdVotes &&
             (std::holds_alternative<Prepare>(send->msg) || std::holds_alternative<Commit>(send->msg)))
            continue;
         if (auto* a = std::get_if<BlockAnnounce>(&send->msg); a && behavior_.withholdVotes)
         {
            // The inner engine counts its own commit; keep that seal private too.
            auto& seals = a->block.commitSeals;
            seals.erase(std::remove_if(seals.begin(), seals.end(),
                                       [&](const ledger::CommitSeal& s) { return s.validator == self; }),
                        seals.end());
            if (seals.size() < inner_->validators().quorum())
               continue;
         }
         if (auto* rc = std::get_if<RoundChange>(&send->msg);
             rc && behavior_.stripCertificates && rc->prepared)
         {
            out.push_back(Send{make_round_change(rc->height, rc->round, std::nullopt, inner_->key()),
                               send->to});
            continue;
         }
         out.push_back(std::move(action));
      }
      step.actions = std::move(out);
      return step;
   }
}  // namespace hybridchain::consensus
