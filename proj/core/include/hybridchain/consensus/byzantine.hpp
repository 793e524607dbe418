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

#include "hybridchain/consensus/ibft.hpp"

#include <memory>
#include <set>
#include <tuple>

namespace hybridchain::consensus
{
   struct ByzantineBehavior
   {
      /// As proposer, send one block to half of the validators and a
      /// conflicting block (same height and round) to the rest.
      bool equivocate = false;
      /// Prepare and commit every block hash seen at the current height.
      bool doubleVote = false;
      /// Never send own prepares or commits.
      bool withholdVotes = false;
      /// Send round changes without the prepared certificate.
      bool stripCertificates = false;

      bool any() const { return equivocate || doubleVote || withholdVotes || stripCertificates; }
   };

   /// Faulty validator: an honest engine whose outbound traffic is rewritten.
   class ByzantineEngine : public Participant
   {
     public:
      ByzantineEngine(std::unique_ptr<IbftEngine> inner, ByzantineBehavior behavior,
                      std::vector<NodeId> validatorPeers, std::vector<NodeId> otherPeers);

      Step start(Millis now) override;
      Step on_message(const ConsensusMessage& msg, Millis now) override;
      Step on_propose_due(std::uint64_t height, std::uint64_t round, Millis now) override;
      Step on_round_timeout(std::uint64_t height, std::uint64_t round, Millis now) override;

      const IbftCounters& counters() const override { return inner_->counters(); }
      const IbftEngine&   inner() const { return *inner_; }

     private:
      Step rewrite(Step step);
      void vote_for(std::uint64_t height, std::uint64_t round, const Hash& hash,
                    std::vector<Action>& out);

      std::unique_ptr<IbftEngine>                                 inner_;
      ByzantineBehavior                                           behavior_;
      std::vector<NodeId>                                         validatorPeers_;
      std::vector<NodeId>                                         otherPeers_;
      std::set<std::tuple<std::uint64_t, std::uint64_t, Hash>>    voted_;
   };
}  // namespace hybridchain::consensus
