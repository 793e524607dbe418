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

#include "hybridchain/sim/event_queue.hpp"

#include <algorithm>

namespace hybridchain::sim
{
   void EventQueue::schedule(Millis delay, Action action)
   {
      if (delay < 0)
         throw std::invalid_argument("negative delay " + std::to_string(delay));
      schedule_at(now_ + delay, std::move(action));
   }

   void EventQueue::schedule_at(Millis at, Action action)
   {
      if (at < now_)
         throw std::invalid_argument("event at " + std::to_string(at) + " precedes now " +
                                     std::to_string(now_));
      heap_.push_back({at, sequence_++, std::move(action)});
      std::push_heap(heap_.begin(), heap_.end(), Later{});
   }

   Millis EventQueue::run_until(std::optional<Millis> stop)
   {
      halted_ = false;
      while (!heap_.empty() && !halted_)
      {
         if (stop && heap_.front().fireAt > *stop)
            break;
         std::pop_heap(heap_.begin(), heap_.end(), Later{});
         Event ev = std::move(heap_.back());
         heap_.pop_back();
         now_ = ev.fireAt;
         if (++processed_ > cap_)
            throw LivelockGuard(cap_, now_);
         ev.action();
      }
      return now_;
   }
}  // namespace hybridchain::sim
