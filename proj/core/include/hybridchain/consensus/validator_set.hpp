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

#include "hybridchain/bytes.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hybridchain::consensus
{
   /// floor((n - 1) / 3)
   std::size_t max_faulty(std::size_t n);

   /// Votes needed to prepare or commit: ceil(2n / 3). For n = 3f + 1 this is
   /// 2f + 1; for other sizes it is the smallest count keeping any two quorums
   /// overlapping in at least f + 1 validators.
   std::size_t quorum_size(std::size_t n);

   /// Fixed, ordered validator membership for a run.
   class ValidatorSet
   {
     public:
      explicit ValidatorSet(std::vector<Address> validators);

      std::size_t                 size() const { return validators_.size(); }
      std::size_t                 f() const { return max_faulty(size()); }
      std::size_t                 quorum() const { return quorum_size(size()); }
      const Address&              at(std::size_t i) const { return validators_.at(i); }
      bool                        contains(const Address& a) const { return index_of(a).has_value(); }
      std::optional<std::size_t>  index_of(const Address& a) const;
      const std::vector<Address>& members() const { return validators_; }

     private:
      std::vector<Address> validators_;
   };

   /// Round-robin: validators[(height + round) mod n].
   const Address& proposer_for(const ValidatorSet& set, std::uint64_t height, std::uint64_t round);
}  // namespace hybridchain::consensus
