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

#include "hybridchain/consensus/byzantine.hpp"
#include "hybridchain/node/node.hpp"
#include "hybridchain/sim/latency.hpp"
#include "hybridchain/sim/network.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace hybridchain::harness
{
   /// Malformed config text. `line` is 1-based; `field` names the key or
   /// section involved.
   struct ParseError : std::runtime_error
   {
      ParseError(std::size_t line, std::string field, const std::string& what)
          : std::runtime_error("line " + std::to_string(line) + " (" + field + "): " + what),
            line(line),
            field(std::move(field))
      {
      }
      std::size_t line;
      std::string field;
   };

   /// Well-formed config that breaks an invariant.
   struct ValidationError : std::runtime_error
   {
      using std::runtime_error::runtime_error;
   };

   struct IoError : std::runtime_error
   {
      using std::runtime_error::runtime_error;
   };

   /// The agreement workflow: every domain registers; providers publish;
   /// consumers select; each group gets one private deployment, then breach
   /// reports, and the first `batches` groups commit one batch each.
   struct WorkloadConfig
   {
      std::size_t domains            = 100;
      std::size_t providers          = 40;
      std::size_t publishPerProvider = 2;
      std::size_t selects            = 60;
      std::size_t deploys            = 60;
      std::size_t breachesPerGroup   = 4;
      std::size_t batches            = 2;
      std::size_t batchSize          = 10;
      /// Upper bound of the uniform wait before each submission; 0 means one
      /// block interval.
      Millis jitterMs = 0;

      bool empty() const { return domains == 0; }
   };

   struct ScenarioConfig
   {
      std::string   preset        = "paper-default";
      std::uint64_t seed          = 1;
      Millis        runDurationMs = 900'000;

      std::size_t               validators = 4;
      std::size_t               members    = 3;
      consensus::IbftParams     ibft;
      sim::LatencyModel         latency;
      node::PrivacySettings     privacy;
      WorkloadConfig            workload;
      std::vector<sim::Crash>   crashes;
      std::vector<sim::Partition> partitions;
      std::map<NodeId, consensus::ByzantineBehavior> byzantine;

      Millis jitter() const { return workload.jitterMs > 0 ? workload.jitterMs : ibft.blockInterval; }
      std::size_t consumers() const { return workload.domains - workload.providers; }
   };

   /// Four validators, three member nodes with enclaves, 5 s block interval.
   ScenarioConfig paper_default();

   /// Throws ParseError or ValidationError.
   ScenarioConfig parse_config(std::string_view text);
   /// Throws IoError, ParseError or ValidationError.
   ScenarioConfig load_config(const std::string& path);
   /// Throws ValidationError naming the violated invariant.
   void validate(const ScenarioConfig& config);

   /// Config text that parses back to the same config.
   std::string to_text(const ScenarioConfig& config);
}  // namespace hybridchain::harness
