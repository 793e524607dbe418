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

namespace hybridchain::consensus
{
   /// Non-validating node. Collects proposals and commit seals from the
   /// validators and finalizes a block once it holds the block body and a
   /// quorum of valid seals for its hash.
   class Follower : public Participant
   {
     public:
      Follower(ValidatorSet validators, ledger::ChainStore& chain);

      Step start(Millis now) override;
      Step on_message(const ConsensusMessage& msg, Millis now) override;
      Step on_propose_due(std::uint64_t, std::uint64_t, Millis) override { return {Outcome::Ignored, {}}; }
      Step on_round_timeout(std::uint64_t, std::uint64_t, Millis) override { return {Outcome::Ignored, {}}; }

      const IbftCounters& counters() const override { return counters_; }

     private:
      struct Pending
      {
         std::map<Hash, ledger::Block>                           bodies;
         std::map<Hash, std::map<Address, ledger::CommitSeal>>   seals;
      };

      Outcome handle(const ConsensusMessage& msg, std::vector<Action>& out);
      void    drain(std::vector<Action>& out);
      bool    within_window(std::uint64_t height) const;

      ValidatorSet                       validators_;
      ledger::ChainStore&                chain_;
      std::map<std::uint64_t, Pending>   pending_;
      IbftCounters                       counters_;
   };
}  // namespace hybridchain::consensus
