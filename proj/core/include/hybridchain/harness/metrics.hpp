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
#include "hybridchain/sim/network.hpp"

#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace hybridchain::harness
{
   enum class TxKind
   {
      Register,
      Publish,
      Select,
      DeployPrivate,
      RegisterBreach,
      BreachBatch,
   };

   inline constexpr TxKind all_kinds[] = {TxKind::Register,      TxKind::Publish,        TxKind::Select,
                                          TxKind::DeployPrivate, TxKind::RegisterBreach, TxKind::BreachBatch};

   /// CSV name: register, publish, select, deploy_private, register_breach,
   /// breach_batch.
   std::string_view      to_string(TxKind kind);
   std::optional<TxKind> kind_from_method(std::string_view method);
   bool                  is_private(TxKind kind);

   /// End-to-end latency of one accepted request, from client initiation to
   /// its receipt.
   struct LatencySample
   {
      Hash                         txId;
      TxKind                       kind     = TxKind::Register;
      Millis                       submitMs = 0;
      Millis                       finalMs  = 0;
      std::optional<Millis>        enclaveMs;  // private kinds only
      std::optional<std::uint64_t> blockHeight;
      std::optional<Hash>          groupId;

      Millis latency() const { return finalMs - submitMs; }
   };

   /// Sorts by submit time, then transaction id.
   void sort_samples(std::vector<LatencySample>& samples);

   struct KindStats
   {
      std::size_t count = 0;
      double      mean  = 0;
      double      stddev = 0;  // population
      Millis      p50   = 0;
      Millis      p95   = 0;
      Millis      min   = 0;
      Millis      max   = 0;

      /// Coefficient of variation, stddev / mean; 0 for an empty set.
      double cv() const { return mean > 0 ? stddev / mean : 0.0; }
   };

   /// Nearest-rank percentile of a sorted, non-empty list: the value at rank
   /// ceil(p / 100 * n).
   Millis nearest_rank(const std::vector<Millis>& sorted, double p);

   KindStats compute_stats(std::vector<Millis> values);

   struct MetricsReport
   {
      std::map<TxKind, KindStats> perKind;
      /// All public kinds together.
      KindStats                   publicAll;
      std::uint64_t               blocks            = 0;
      double                      meanBlockInterval = 0;
      sim::NetworkCounters        network;
      std::uint64_t               txDropped      = 0;
      std::uint64_t               rpcRejected    = 0;
      std::uint64_t               contractErrors = 0;
      std::uint64_t               authFailures   = 0;
      std::uint64_t               refetches      = 0;
      std::uint64_t               roundChanges   = 0;
      std::uint64_t               groupsHalted   = 0;
   };

   /// Fills the latency statistics; counters are left for the caller.
   MetricsReport summarize(const std::vector<LatencySample>& samples);

   /// Public-kind latencies and enclave components, in sample order.
   std::vector<Millis> public_latencies(const std::vector<LatencySample>& samples);
   std::vector<Millis> enclave_components(const std::vector<LatencySample>& samples);
}  // namespace hybridchain::harness
