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

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hybridchain::sim
{
   /// Raised when a run processes more events than the configured cap.
   struct LivelockGuard : std::runtime_error
   {
      LivelockGuard(std::uint64_t processed, Millis at)
          : std::runtime_error("event cap of " + std::to_string(processed) +
                               " exceeded at t=" + std::to_string(at) + " ms"),
            processed(processed),
            at(at)
      {
      }
      std::uint64_t processed;
      Millis        at;
   };

   inline constexpr std::uint64_t default_event_cap = 10'000'000;

   /// Virtual-time event loop. Events fire in (fireAt, sequence) order, where
   /// the sequence number is assigned at scheduling time.
   class EventQueue
   {
     public:
      using Action = std::function<void()>;

      explicit EventQueue(std::uint64_t eventCap = default_event_cap) : cap_(eventCap) {}

      Millis now() const { return now_; }

      /// Throws std::invalid_argument on a negative delay.
      void schedule(Millis delay, Action action);
      /// Throws std::invalid_argument when `at` is in the past.
      void schedule_at(Millis at, Action action);

      /// Runs events with fireAt <= stop (all events when stop is empty) and
      /// returns the final virtual time. Throws LivelockGuard.
      Millis run_until(std::optional<Millis> stop = std::nullopt);

      /// Stops the current run_until after the event being processed.
      void halt() { halted_ = true; }

      std::size_t   pending() const { return heap_.size(); }
      std::uint64_t processed() const { return processed_; }

     private:
      struct Event
      {
         Millis        fireAt;
         std::uint64_t sequence;
         Action        action;
      };
      struct Later
      {
         bool operator()(const Event& a, const Event& b) const
         {
            return a.fireAt != b.fireAt ? a.fireAt > b.fireAt : a.sequence > b.sequence;
         }
      };

      std::vector<Event> heap_;
      Millis             now_       = 0;
      std::uint64_t      sequence_  = 0;
      std::uint64_t      processed_ = 0;
      std::uint64_t      cap_;
      bool               halted_ = false;
   };
}  // namespace hybridchain::sim
