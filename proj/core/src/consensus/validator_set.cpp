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

#include "hybridchain/consensus/validator_set.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hybridchain::consensus
{
   std::size_t max_faulty(std::size_t n)
   {
      if (n == 0)
         throw std::invalid_argument("validator set must not be empty");
      return (n - 1) / 3;
   }

   std::size_t quorum_size(std::size_t n)
   {
      if (n == 0)
         throw std::invalid_argument("validator set must not be empty");
      return (2 * n + 2) / 3;
   }

   ValidatorSet::ValidatorSet(std::vector<Address> validators) : validators_(std::move(validators))
   {
      if (validators_.empty())
         throw std::invalid_argument("validator set must not be empty");
      std::set<Address> unique(validators_.begin(), validators_.end());
      if (unique.size() != validators_.size())
         throw std::invalid_argument("duplicate validator address");
   }

   std::optional<std::size_t> ValidatorSet::index_of(const Address& a) const
   {
      auto it = std::find(validators_.begin(), validators_.end(), a);
      if (it == validators_.end())
         return std::nullopt;
      return static_cast<std::size_t>(it - validators_.begin());
   }

   const Address& proposer_for(const ValidatorSet& set, std::uint64_t height, std::uint64_t round)
   {
      return set.at(static_cast<std::size_t>((height + round) % set.size()));
   }
}  // namespace hybridchain::consensus
