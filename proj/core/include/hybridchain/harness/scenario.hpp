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

#include "hybridchain/harness/config.hpp"
#include "hybridchain/harness/isolation.hpp"
#include "hybridchain/harness/metrics.hpp"
#include "hybridchain/node/node.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hybridchain::harness
{
   struct RunOptions
   {
      /// Record the event trace and the consensus trace.
      bool          trace         = false;
      /// Byte-scan non-member stores and all network traffic for group secrets.
      bool          isolationScan = false;
      std::uint64_t eventCap      = sim::default_event_cap;
   };

   struct RpcRejection
   {
      Millis      at = 0;
      std::string method;
      Address     sender;
      std::string reason;
   };

   /// Two honest nodes finalized different blocks at one height, or a node
   /// saw a quorum-sealed block conflicting with its own finalized block.
   struct SafetyIncident
   {
      NodeId        node   = 0;
      std::uint64_t height = 0;
      Millis        at     = 0;
      std::string   detail;
   };

   /// Member private states differ, or a group halted.
   struct DivergenceIncident
   {
      Hash        groupId;
      std::string detail;
   };

   struct RunResult
   {
      std::vector<LatencySample>      samples;  // sorted by submit time, then tx id
      MetricsReport                   report;
      std::vector<RpcRejection>       rejections;
      std::vector<SafetyIncident>     safety;
      std::vector<DivergenceIncident> divergence;
      std::optional<IsolationReport>  isolation;
      std::string                     trace;           // empty unless traced
      std::string                     consensusTrace;  // empty unless traced
      Millis                          endTime          = 0;
      std::uint64_t                   plannedRequests  = 0;
      bool                            workloadComplete = false;

      bool violated() const { return !safety.empty() || !divergence.empty(); }
   };

   using FinalizedObserver = std::function<void(NodeId, const ledger::Block&, const Hash&, Millis)>;

   /// One isolated run: nodes, network, workload driver and run-end checks.
   /// Identities, latencies, private draws and workload timing all come from
   /// streams derived from the config seed.
   class Simulation
   {
     public:
      explicit Simulation(ScenarioConfig config, RunOptions options = {});
      ~Simulation();

      Simulation(const Simulation&)            = delete;
      Simulation& operator=(const Simulation&) = delete;

      /// Runs until the stop rule and evaluates the run-end checks. Throws
      /// sim::LivelockGuard when the event cap is exceeded. Call once.
      RunResult run();

      const ScenarioConfig&          config() const;
      sim::Network&                  network();
      sim::EventQueue&               queue();
      node::Node&                    node(NodeId id);
      std::size_t                    node_count() const;
      const node::Directory&         directory() const;
      const consensus::ValidatorSet& validator_set() const;
      /// Domain addresses by workload index (providers first).
      const std::vector<Address>&    domains() const;
      bool                           honest(NodeId id) const;

      /// Extra observer of every node's finalizations.
      void observe_finalized(FinalizedObserver observer);

     private:
      struct Impl;
      std::unique_ptr<Impl> impl_;
   };

   RunResult run_scenario(const ScenarioConfig& config, const RunOptions& options = {});

   /// SHA-256 over the sorted enclave components of a run's samples: equal
   /// digests mean equal multisets.
   Hash enclave_multiset_digest(const std::vector<LatencySample>& samples);

   struct SweepPoint
   {
      Millis    value = 0;
      RunResult result;
      Hash      enclaveDigest;
   };

   struct SweepReport
   {
      std::string             parameter;
      std::vector<SweepPoint> points;  // in the order the values were given

      bool        violated() const;
      /// Per-value public and private means plus the enclave digest.
      std::string text() const;
   };

   /// Supported parameters: "block-interval". One independent run per value,
   /// all with the config's seed, executed concurrently.
   /// Throws ValidationError for an unknown parameter or an invalid value.
   SweepReport sweep(const ScenarioConfig& config, std::string_view parameter, const std::vector<Millis>& values,
                     const RunOptions& options = {});
}  // namespace hybridchain::harness
