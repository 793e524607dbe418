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

#include "hybridchain/harness/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace hybridchain::harness
{
   std::string format_ms(double value)
   {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.3f", value);
      return buf;
   }

   std::string csv_text(const std::vector<LatencySample>& samples)
   {
      std::ostringstream o;
      o << csv_header << "\n";
      for (const auto& s : samples)
      {
         o << s.txId.str() << "," << to_string(s.kind) << "," << s.submitMs << "," << s.finalMs << ","
           << s.latency() << ",";
         if (s.enclaveMs)
            o << *s.enclaveMs;
         o << ",";
         if (s.blockHeight)
            o << *s.blockHeight;
         o << ",";
         if (s.groupId)
            o << s.groupId->str();
         o << "\n";
      }
      return o.str();
   }

   std::string summary_text(const MetricsReport& r, const ScenarioConfig& c)
   {
      std::ostringstream o;
      o << "[run]\n"
        << "preset = " << c.preset << "\n"
        << "seed = " << c.seed << "\n"
        << "validators = " << c.validators << "\n"
        << "members = " << c.members << "\n"
        << "block_interval_ms = " << c.ibft.blockInterval << "\n"
        << "blocks = " << r.blocks << "\n"
        << "mean_block_interval_ms = " << format_ms(r.meanBlockInterval) << "\n\n"
        << "[counters]\n"
        << "messages_sent = " << r.network.sent << "\n"
        << "messages_delivered = " << r.network.delivered << "\n"
        << "dropped_partition = " << r.network.droppedPartition << "\n"
        << "dropped_crash = " << r.network.droppedCrash << "\n"
        << "tx_dropped = " << r.txDropped << "\n"
        << "rpc_rejected = " << r.rpcRejected << "\n"
        << "contract_errors = " << r.contractErrors << "\n"
        << "auth_failures = " << r.authFailures << "\n"
        << "refetches = " << r.refetches << "\n"
        << "round_changes = " << r.roundChanges << "\n"
        << "groups_halted = " << r.groupsHalted << "\n";

      auto stats = [&](std::string_view name, const KindStats& s) {
         o << "\n[kind." << name << "]\n"
           << "count = " << s.count << "\n"
           << "mean_ms = " << format_ms(s.mean) << "\n"
           << "p50_ms = " << s.p50 << "\n"
           << "p95_ms = " << s.p95 << "\n"
           << "min_ms = " << s.min << "\n"
           << "max_ms = " << s.max << "\n";
      };
      for (const auto& [k, s] : r.perKind)
         stats(to_string(k), s);
      stats("public", r.publicAll);
      return o.str();
   }

   void write_file(const std::filesystem::path& path, std::string_view text)
   {
      std::ofstream out(path, std::ios::binary | std::ios::trunc);
      if (!out)
         throw IoError("cannot write " + path.string());
      out.write(text.data(), static_cast<std::streamsize>(text.size()));
      if (!out)
         throw IoError("short write to " + path.string());
   }

   void write_csv(const std::vector<LatencySample>& samples, const std::filesystem::path& path)
   {
      write_file(path, csv_text(samples));
   }

   void write_summary(const MetricsReport& report, const ScenarioConfig& config, const std::filesystem::path& path)
   {
      write_file(path, summary_text(report, config));
   }
}  // namespace hybridchain::harness
