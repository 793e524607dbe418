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

#include <string>
#include <unordered_map>
#include <vector>

namespace hybridchain::harness
{
   /// A secret byte string and the group it belongs to.
   struct Needle
   {
      Hash        groupId;
      std::string label;
      Bytes       bytes;
   };

   /// Substring search for many needles at once. Needles are indexed by their
   /// first eight bytes; a haystack offset is compared in full only when its
   /// eight-byte prefix matches.
   class NeedleIndex
   {
     public:
      /// Throws std::invalid_argument for needles shorter than eight bytes.
      void add(Needle needle);

      std::size_t   size() const { return needles_.size(); }
      const Needle& at(std::size_t i) const { return needles_.at(i); }

      /// Indices of every needle that occurs in `haystack`, each once.
      std::vector<std::size_t> find_all(ByteView haystack) const;

     private:
      std::vector<Needle>                                      needles_;
      std::unordered_map<std::uint64_t, std::vector<std::size_t>> byPrefix_;
   };

   struct IsolationHit
   {
      Hash        groupId;
      std::string needle;
      std::string where;
   };

   struct IsolationReport
   {
      std::uint64_t             storesScanned   = 0;
      std::uint64_t             messagesScanned = 0;
      std::uint64_t             bytesScanned    = 0;
      std::uint64_t             needles         = 0;
      std::vector<IsolationHit> hits;

      bool clean() const { return hits.empty(); }
   };
}  // namespace hybridchain::harness
