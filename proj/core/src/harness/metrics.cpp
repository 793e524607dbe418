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

#include "hybridchain/harness/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace hybridchain::harness
{
   std::string_view to_string(TxKind kind)
   {
      switch (kind)
      {
         case TxKind::Register: return "register";
         case TxKind::Publish: return "publish";
         case TxKind::Select: return "select";
         case TxKind::DeployPrivate: return "deploy_private";
         case TxKind::RegisterBreach: return "register_breach";
         case TxKind::BreachBatch: return "breach_batch";
      }
      return "unknown";
   }

   std::optional<TxKind> kind_from_method(std::string_view method)
   {
      if (method == "register")
         return TxKind::Register;
      if (method == "publish_service")
         return TxKind::Publish;
      if (method == "select_service")
         return TxKind::Select;
      if (method == "deploy_register_breach")
         return TxKind::DeployPrivate;
      if (method == "register_breach")
         return TxKind::RegisterBreach;
      if (method == "commit_breach_batch")
         return TxKind::BreachBatch;
      return std::nullopt;
   }

   bool is_private(TxKind kind)
   {
      return kind == TxKind::DeployPrivate || kind == TxKind::RegisterBreach || kind == TxKind::BreachBatch;
   }

   void sort_samples(std::vector<LatencySample>& samples)
   {
      std::sort(samples.begin(), samples.end(), [](const LatencySample& a, const LatencySample& b) {
         return a.submitMs != b.submitMs ? a.submitMs < b.submitMs : a.txId < b.txId;
      });
   }

   Millis nearest_rank(const std::vector<Millis>& sorted, double p)
   {
      auto n    = sorted.size();
      auto rank = static_cast<std::size_t>(std::ceil(p / 100.0 * static_cast<double>(n)));
      rank      = std::clamp<std::size_t>(rank, 1, n);
      return sorted[rank - 1];
   }

   KindStats compute_stats(std::vector<Millis> values)
   {
      KindStats s;
      s.count = values.size();
      if (values.empty())
         return s;
      std::sort(values.begin(), values.end());
      double sum = 0;
      for (auto v : values)
         sum += static_cast<double>(v);
      s.mean     = sum / static_cast<double>(s.count);
      double var = 0;
      for (auto v : values)
         var += (static_cast<double>(v) - s.mean) * (static_cast<double>(v) - s.mean);
      s.stddev = std::sqrt(var / static_cast<double>(s.count));
      s.p50    = nearest_rank(values, 50);
      s.p95    = nearest_rank(values, 95);
      s.min    = values.front();
      s.max    = values.back();
      return s;
   }

   MetricsReport summarize(const std::vector<LatencySample>& samples)
   {
      std::map<TxKind, std::vector<Millis>> byKind;
      for (auto k : all_kinds)
         byKind[k];
      for (const auto& s : samples)
         byKind[s.kind].push_back(s.latency());

      MetricsReport r;
      for (auto& [k, v] : byKind)
         r.perKind[k] = compute_stats(std::move(v));
      r.publicAll = compute_stats(public_latencies(samples));
      return r;
   }

   std::vector<Millis> public_latencies(const std::vector<LatencySample>& samples)
   {
      std::vector<Millis> out;
      for (const auto& s : samples)
         if (!is_private(s.kind))
            out.push_back(s.latency());
      return out;
   }

   std::vector<Millis> enclave_components(const std::vector<LatencySample>& samples)
   {
      std::vector<Millis> out;
      for (const auto& s : samples)
         if (s.enclaveMs)
            out.push_back(*s.enclaveMs);
      return out;
   }
}  // namespace hybridchain::harness
