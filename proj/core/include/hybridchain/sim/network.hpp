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

#include "hybridchain/sim/event_queue.hpp"
#include "hybridchain/sim/latency.hpp"
#include "hybridchain/sim/trace.hpp"

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace hybridchain::sim
{
   /// Messages between `a` and `b` (either direction) are lost while the
   /// delivery time falls in [from, to).
   struct Partition
   {
      std::set<NodeId> a;
      std::set<NodeId> b;
      Millis           from = 0;
      Millis           to   = 0;

      bool separates(NodeId x, NodeId y, Millis at) const;
   };

   struct Crash
   {
      NodeId node = 0;
      Millis at   = 0;
   };

   /// Crashed nodes never recover within a run.
   struct FaultPlan
   {
      std::vector<Crash>     crashes;
      std::vector<Partition> partitions;
      std::set<NodeId>       byzantine;

      bool crashed(NodeId node, Millis at) const;
      bool partitioned(NodeId x, NodeId y, Millis at) const;
   };

   struct Envelope
   {
      NodeId      from = 0;
      NodeId      to   = 0;
      LinkClass   link = LinkClass::Consensus;
      std::string kind;
      Bytes       payload;
      Millis      sentAt = 0;
   };

   struct NetworkCounters
   {
      std::uint64_t sent             = 0;
      std::uint64_t delivered        = 0;
      std::uint64_t droppedPartition = 0;
      std::uint64_t droppedCrash     = 0;
   };

   /// Full-mesh message transport over the event queue. Link delays come from
   /// one seeded stream per link class; partitions and crashes are evaluated at
   /// delivery time.
   class Network
   {
     public:
      using Handler = std::function<void(const Envelope&)>;
      using Tap     = std::function<void(const Envelope&)>;

      Network(EventQueue& queue, LatencyModel latency, std::uint64_t seed, FaultPlan faults,
              Trace* trace = nullptr);

      void attach(NodeId node, Handler handler);
      /// Observes every message at send time, including ones later dropped.
      void add_wiretap(Tap tap) { taps_.push_back(std::move(tap)); }

      /// Delay drawn from the link class's stream.
      void send(NodeId from, NodeId to, LinkClass link, std::string kind, Bytes payload,
                std::string_view detail = {});
      /// Delay chosen by the caller (pre-drawn elsewhere).
      void send_after(NodeId from, NodeId to, LinkClass link, Millis delay, std::string kind,
                      Bytes payload, std::string_view detail = {});

      /// Next delay on a link class's stream, for hops that are not messages
      /// between nodes (client to RPC endpoint).
      Millis sample(LinkClass link);

      bool crashed(NodeId node) const { return faults_.crashed(node, queue_.now()); }
      /// Adds a crash while the run is in progress.
      void add_crash(Crash crash) { faults_.crashes.push_back(crash); }

      EventQueue&            queue() { return queue_; }
      const LatencyModel&    latency() const { return latency_; }
      const FaultPlan&       faults() const { return faults_; }
      const NetworkCounters& counters() const { return counters_; }
      Trace*                 trace() { return trace_; }

     private:
      void deliver(const std::shared_ptr<Envelope>& env);

      EventQueue&              queue_;
      LatencyModel             latency_;
      FaultPlan                faults_;
      Trace*                   trace_;
      std::map<LinkClass, Rng> streams_;
      std::map<NodeId, Handler> handlers_;
      std::vector<Tap>         taps_;
      NetworkCounters          counters_;
   };
}  // namespace hybridchain::sim
