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

#include "hybridchain/sim/network.hpp"

#include <memory>

namespace hybridchain::sim
{
   bool Partition::separates(NodeId x, NodeId y, Millis at) const
   {
      if (at < from || at >= to)
         return false;
      return (a.contains(x) && b.contains(y)) || (a.contains(y) && b.contains(x));
   }

   bool FaultPlan::crashed(NodeId node, Millis at) const
   {
      for (const auto& c : crashes)
         if (c.node == node && at >= c.at)
            return true;
      return false;
   }

   bool FaultPlan::partitioned(NodeId x, NodeId y, Millis at) const
   {
      for (const auto& p : partitions)
         if (p.separates(x, y, at))
            return true;
      return false;
   }

   Network::Network(EventQueue& queue, LatencyModel latency, std::uint64_t seed, FaultPlan faults,
                    Trace* trace)
       : queue_(queue), latency_(std::move(latency)), faults_(std::move(faults)), trace_(trace)
   {
      for (auto link : {LinkClass::Consensus, LinkClass::Enclave, LinkClass::Rpc})
         streams_.emplace(link, derive_rng(seed, "link/" + std::string(to_string(link))));
   }

   void Network::attach(NodeId node, Handler handler) { handlers_[node] = std::move(handler); }

   Millis Network::sample(LinkClass link) { return latency_.of(link).sample(streams_.at(link)); }

   void Network::send(NodeId from, NodeId to, LinkClass link, std::string kind, Bytes payload,
                      std::string_view detail)
   {
      send_after(from, to, link, sample(link), std::move(kind), std::move(payload), detail);
   }

   void Network::send_after(NodeId from, NodeId to, LinkClass link, Millis delay, std::string kind,
                            Bytes payload, std::string_view detail)
   {
      auto env = std::make_shared<Envelope>(
          Envelope{from, to, link, std::move(kind), std::move(payload), queue_.now()});
      ++counters_.sent;
      for (const auto& tap : taps_)
         tap(*env);
      if (trace_ && trace_->enabled())
         trace_->record(queue_.now(), "send:" + env->kind, node_name(from), node_name(to),
                        std::string(to_string(link)) + " delay=" + std::to_string(delay) +
                            (detail.empty() ? "" : " " + std::string(detail)));
      if (faults_.crashed(from, queue_.now()))
      {
         ++counters_.droppedCrash;
         return;
      }
      queue_.schedule(delay, [this, env] { deliver(env); });
   }

   void Network::deliver(const std::shared_ptr<Envelope>& env)
   {
      auto now = queue_.now();
      if (faults_.partitioned(env->from, env->to, now))
      {
         ++counters_.droppedPartition;
         if (trace_ && trace_->enabled())
            trace_->record(now, "drop:" + env->kind, node_name(env->from), node_name(env->to),
                           "partition");
         return;
      }
      if (faults_.crashed(env->to, now))
      {
         ++counters_.droppedCrash;
         if (trace_ && trace_->enabled())
            trace_->record(now, "drop:" + env->kind, node_name(env->from), node_name(env->to),
                           "crashed");
         return;
      }
      auto it = handlers_.find(env->to);
      if (it == handlers_.end())
         return;
      ++counters_.delivered;
      if (trace_ && trace_->enabled())
         trace_->record(now, "deliver:" + env->kind, node_name(env->from), node_name(env->to), "");
      it->second(*env);
   }
}  // namespace hybridchain::sim
