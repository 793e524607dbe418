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

#include <cstdint>
#include <map>
#include <string>

namespace hybridchain::contracts
{
   /// Cost of an operation: base + writes * perStorageWrite + reads * perStorageRead.
   struct GasSchedule
   {
      std::map<std::string, std::uint64_t, std::less<>> baseCost;
      std::uint64_t                                     perStorageWrite = 20'000;
      std::uint64_t                                     perStorageRead  = 2'100;
   };

   /// Base 21,000 for every public operation and for privacy markers.
   const GasSchedule& default_gas_schedule();

   /// Throws ContractError(UnknownOperation) when the schedule has no entry.
   std::uint64_t gas_of(std::string_view operation, std::uint64_t writes, std::uint64_t reads,
                        const GasSchedule& schedule = default_gas_schedule());

   /// Operation name under which privacy markers are charged.
   inline constexpr std::string_view marker_operation = "privacy_marker";
}  // namespace hybridchain::contracts
