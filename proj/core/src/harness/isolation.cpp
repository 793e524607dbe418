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

#include "hybridchain/harness/isolation.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace hybridchain::harness
{
   namespace
   {
      std::uint64_t prefix_of(const std::uint8_t* p)
      {
         std::uint64_t v;
         std::memcpy(&v, p, sizeof v);
         return v;
      }
   }  // namespace

   void NeedleIndex::add(Needle needle)
   {
      if (needle.bytes.size() < 8)
         throw std::invalid_argument("needle '" + needle.label + "' is shorter than eight bytes");
      byPrefix_[prefix_of(needle.bytes.data())].push_back(needles_.size());
      needles_.push_back(std::move(needle));
   }

   std::vector<std::size_t> NeedleIndex::find_all(ByteView haystack) const
   {
      std::vector<std::size_t> found;
      if (haystack.size() < 8 || needles_.empty())
         return found;
      const auto* base = haystack.data();
      for (std::size_t off = 0; off + 8 <= haystack.size(); ++off)
      {
         auto it = byPrefix_.find(prefix_of(base + off));
         if (it == byPrefix_.end())
            continue;
         for (auto idx : it->second)
         {
            const auto& n = needles_[idx].bytes;
            if (off + n.size() <= haystack.size() && std::memcmp(base + off, n.data(), n.size()) == 0)
               found.push_back(idx);
         }
      }
      std::sort(found.begin(), found.end());
      found.erase(std::unique(found.begin(), found.end()), found.end());
      return found;
   }
}  // namespace hybridchain::harness
