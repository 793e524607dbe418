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

#include "hybridchain/sim/trace.hpp"

namespace hybridchain::sim
{
   void Trace::record(Millis at, std::string_view type, std::string_view from, std::string_view to,
                      std::string_view detail)
   {
      if (!enabled_)
         return;
      std::string line = std::to_string(at);
      line.append("\t").append(type).append("\t").append(from).append("\t").append(to);
      line.append("\t").append(detail);
      lines_.push_back(std::move(line));
   }

   void Trace::write(std::ostream& out) const
   {
      out << "time\ttype\tfrom\tto\tdetail\n";
      for (const auto& l : lines_)
         out << l << '\n';
   }

   void ConsensusTrace::record(Millis at, NodeId node, std::uint64_t height, std::uint64_t round,
                               std::string_view phase, std::string_view trigger)
   {
      if (!enabled_)
         return;
      std::string line = std::to_string(at);
      line.append("\t").append(node_name(node)).append("\t").append(std::to_string(height));
      line.append("\t").append(std::to_string(round)).append("\t").append(phase);
      line.append("\t").append(trigger);
      lines_.push_back(std::move(line));
   }

   void ConsensusTrace::write(std::ostream& out) const
   {
      out << "time\tnode\theight\tround\tphase\ttrigger\n";
      for (const auto& l : lines_)
         out << l << '\n';
   }
}  // namespace hybridchain::sim
