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

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace hybridchain::sim
{
   /// Ordered event records: time, type, from, to, detail (tab separated).
   class Trace
   {
     public:
      explicit Trace(bool enabled = false) : enabled_(enabled) {}

      bool enabled() const { return enabled_; }
      void record(Millis at, std::string_view type, std::string_view from, std::string_view to,
                  std::string_view detail);

      const std::vector<std::string>& lines() const { return lines_; }
      void                            write(std::ostream& out) const;

     private:
      bool                     enabled_;
      std::vector<std::string> lines_;
   };

   /// One line per consensus state transition: time, node, height, round,
   /// phase, trigger.
   class ConsensusTrace
   {
     public:
      explicit ConsensusTrace(bool enabled = false) : enabled_(enabled) {}

      bool enabled() const { return enabled_; }
      void record(Millis at, NodeId node, std::uint64_t height, std::uint64_t round,
                  std::string_view phase, std::string_view trigger);

      const std::vector<std::string>& lines() const { return lines_; }
      void                            write(std::ostream& out) const;

     private:
      bool                     enabled_;
      std::vector<std::string> lines_;
   };

   inline std::string node_name(NodeId id) { return "n" + std::to_string(id); }
}  // namespace hybridchain::sim
