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
#include "hybridchain/harness/metrics.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace hybridchain::harness
{
   inline constexpr std::string_view csv_header =
       "tx_id,kind,submit_ms,final_ms,latency_ms,enclave_ms,block_height,group_id";

   /// Header plus one row per sample in the given order. Columns that do not
   /// apply to a sample are empty.
   std::string csv_text(const std::vector<LatencySample>& samples);

   /// Structured `key = value` text in sections: [run], [counters] and one
   /// [kind.<name>] per transaction kind.
   std::string summary_text(const MetricsReport& report, const ScenarioConfig& config);

   /// Throws IoError.
   void write_file(const std::filesystem::path& path, std::string_view text);
   void write_csv(const std::vector<LatencySample>& samples, const std::filesystem::path& path);
   void write_summary(const MetricsReport& report, const ScenarioConfig& config, const std::filesystem::path& path);

   /// Milliseconds with three decimals, independent of the locale.
   std::string format_ms(double value);
}  // namespace hybridchain::harness
