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

#include "hybridchain/harness/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace hybridchain::harness
{
   namespace
   {
      struct Entry
      {
         std::size_t line;
         std::string section;
         std::string key;
         std::string value;
      };

      std::string_view trim(std::string_view s)
      {
         auto first = s.find_first_not_of(" \t\r");
         if (first == std::string_view::npos)
            return {};
         auto last = s.find_last_not_of(" \t\r");
         return s.substr(first, last - first + 1);
      }

      std::vector<std::string_view> split(std::string_view s, char sep)
      {
         std::vector<std::string_view> out;
         std::size_t                   start = 0;
         while (true)
         {
            auto pos = s.find(sep, start);
            out.push_back(trim(s.substr(start, pos - start)));
            if (pos == std::string_view::npos)
               return out;
            start = pos + 1;
         }
      }

      template <typename T>
      T parse_number(const Entry& e, std::string_view text)
      {
         T    v{};
         auto r = std::from_chars(text.data(), text.data() + text.size(), v);
         if (r.ec != std::errc() || r.ptr != text.data() + text.size())
            throw ParseError(e.line, e.key, "expected a number, got '" + std::string(text) + "'");
         return v;
      }

      std::uint64_t as_u64(const Entry& e) { return parse_number<std::uint64_t>(e, e.value); }
      std::size_t   as_size(const Entry& e) { return parse_number<std::size_t>(e, e.value); }
      Millis        as_ms(const Entry& e) { return parse_number<Millis>(e, e.value); }
      double        as_double(const Entry& e) { return parse_number<double>(e, e.value); }

      sim::LatencyDist as_dist(const Entry& e)
      {
         try
         {
            return sim::LatencyDist::parse(e.value);
         }
         catch (const std::invalid_argument& ex)
         {
            throw ParseError(e.line, e.key, ex.what());
         }
      }

      std::set<NodeId> as_node_set(const Entry& e, std::string_view text)
      {
         std::set<NodeId> out;
         for (auto part : split(text, ','))
            out.insert(parse_number<NodeId>(e, part));
         return out;
      }

      // crash = <node>@<ms>
      sim::Crash as_crash(const Entry& e)
      {
         auto parts = split(e.value, '@');
         if (parts.size() != 2)
            throw ParseError(e.line, e.key, "expected <node>@<ms>");
         return sim::Crash{parse_number<NodeId>(e, parts[0]), parse_number<Millis>(e, parts[1])};
      }

      // partition = <a,b,...>|<c,d,...>@<from>-<to>
      sim::Partition as_partition(const Entry& e)
      {
         auto at = split(e.value, '@');
         if (at.size() != 2)
            throw ParseError(e.line, e.key, "expected <nodes>|<nodes>@<from>-<to>");
         auto sides = split(at[0], '|');
         auto span  = split(at[1], '-');
         if (sides.size() != 2 || span.size() != 2)
            throw ParseError(e.line, e.key, "expected <nodes>|<nodes>@<from>-<to>");
         return sim::Partition{as_node_set(e, sides[0]), as_node_set(e, sides[1]), parse_number<Millis>(e, span[0]),
                               parse_number<Millis>(e, span[1])};
      }

      // byzantine = <node>:<behavior>,<behavior>...
      std::pair<NodeId, consensus::ByzantineBehavior> as_byzantine(const Entry& e)
      {
         auto colon = e.value.find(':');
         if (colon == std::string::npos)
            throw ParseError(e.line, e.key, "expected <node>:<behavior>[,<behavior>...]");
         std::string_view             v = e.value;
         consensus::ByzantineBehavior b;
         for (auto name : split(v.substr(colon + 1), ','))
         {
            if (name == "equivocate")
               b.equivocate = true;
            else if (name == "double_vote")
               b.doubleVote = true;
            else if (name == "withhold_votes")
               b.withholdVotes = true;
            else if (name == "strip_certificates")
               b.stripCertificates = true;
            else
               throw ParseError(e.line, e.key, "unknown behavior '" + std::string(name) + "'");
         }
         return {parse_number<NodeId>(e, trim(v.substr(0, colon))), b};
      }

      node::MarkerMode as_marker_mode(const Entry& e)
      {
         if (e.value == "after_distribution")
            return node::MarkerMode::AfterDistribution;
         if (e.value == "parallel")
            return node::MarkerMode::Parallel;
         throw ParseError(e.line, e.key, "expected after_distribution or parallel");
      }

      ScenarioConfig preset(const Entry* e)
      {
         std::string name = e ? e->value : "paper-default";
         if (name == "paper-default")
            return paper_default();
         throw ParseError(e ? e->line : 0, "preset", "unknown preset '" + name + "'");
      }

      void apply(ScenarioConfig& c, const Entry& e)
      {
         const auto& s = e.section;
         const auto& k = e.key;
         auto        unknown = [&] { throw ParseError(e.line, k, "unknown key in [" + s + "]"); };

         if (s.empty())
         {
            if (k == "preset")
               return;
            else if (k == "seed")
               c.seed = as_u64(e);
            else if (k == "run_duration_ms")
               c.runDurationMs = as_ms(e);
            else
               unknown();
         }
         else if (s == "network")
         {
            if (k == "validators")
               c.validators = as_size(e);
            else if (k == "members")
               c.members = as_size(e);
            else if (k == "block_interval_ms")
               c.ibft.blockInterval = as_ms(e);
            else if (k == "base_round_timeout_ms")
               c.ibft.baseRoundTimeout = as_ms(e);
            else if (k == "gas_limit")
               c.ibft.gasLimit = as_u64(e);
            else
               unknown();
         }
         else if (s == "latency")
         {
            if (k == "consensus")
               c.latency.consensus = as_dist(e);
            else if (k == "enclave")
               c.latency.enclave = as_dist(e);
            else if (k == "rpc")
               c.latency.rpc = as_dist(e);
            else
               unknown();
         }
         else if (s == "privacy")
         {
            if (k == "tamper_rate")
               c.privacy.tamperRate = as_double(e);
            else if (k == "processing_ms")
               c.privacy.processing = as_ms(e);
            else if (k == "marker_mode")
               c.privacy.markerMode = as_marker_mode(e);
            else if (k == "defer_timeout_ms")
               c.privacy.deferTimeout = as_ms(e);
            else
               unknown();
         }
         else if (s == "workload")
         {
            auto& w = c.workload;
            if (k == "domains")
               w.domains = as_size(e);
            else if (k == "providers")
               w.providers = as_size(e);
            else if (k == "publish_per_provider")
               w.publishPerProvider = as_size(e);
            else if (k == "selects")
               w.selects = as_size(e);
            else if (k == "deploys")
               w.deploys = as_size(e);
            else if (k == "breaches_per_group")
               w.breachesPerGroup = as_size(e);
            else if (k == "batches")
               w.batches = as_size(e);
            else if (k == "batch_size")
               w.batchSize = as_size(e);
            else if (k == "jitter_ms")
               w.jitterMs = as_ms(e);
            else
               unknown();
         }
         else if (s == "faults")
         {
            if (k == "crash")
               c.crashes.push_back(as_crash(e));
            else if (k == "partition")
               c.partitions.push_back(as_partition(e));
            else if (k == "byzantine")
            {
               auto [n, b] = as_byzantine(e);
               c.byzantine[n] = b;
            }
            else
               unknown();
         }
         else
            throw ParseError(e.line, s, "unknown section");
      }

      void require(bool cond, const std::string& what)
      {
         if (!cond)
            throw ValidationError(what);
      }

      std::string nodes_text(const std::set<NodeId>& nodes)
      {
         std::string out;
         for (auto n : nodes)
            out += (out.empty() ? "" : ",") + std::to_string(n);
         return out;
      }
   }  // namespace

   ScenarioConfig paper_default() { return ScenarioConfig{}; }

   ScenarioConfig parse_config(std::string_view text)
   {
      std::vector<Entry> entries;
      std::string        section;
      std::size_t        lineNo = 0;
      std::size_t        pos    = 0;
      while (pos <= text.size())
      {
         auto end  = text.find('\n', pos);
         auto raw  = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
         pos       = end == std::string_view::npos ? text.size() + 1 : end + 1;
         ++lineNo;

         auto hash = raw.find('#');
         auto line = trim(raw.substr(0, hash));
         if (line.empty())
            continue;
         if (line.front() == '[')
         {
            if (line.back() != ']')
               throw ParseError(lineNo, std::string(line), "unterminated section header");
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (section != "network" && section != "latency" && section != "privacy" && section != "workload" &&
                section != "faults")
               throw ParseError(lineNo, section, "unknown section");
            continue;
         }
         auto eq = line.find('=');
         if (eq == std::string_view::npos)
            throw ParseError(lineNo, std::string(line), "expected key = value");
         auto key   = trim(line.substr(0, eq));
         auto value = trim(line.substr(eq + 1));
         if (key.empty())
            throw ParseError(lineNo, "", "missing key");
         if (value.empty())
            throw ParseError(lineNo, std::string(key), "missing value");
         entries.push_back({lineNo, section, std::string(key), std::string(value)});
      }

      const Entry* presetEntry = nullptr;
      for (const auto& e : entries)
         if (e.section.empty() && e.key == "preset")
            presetEntry = &e;
      auto config   = preset(presetEntry);
      config.preset = presetEntry ? presetEntry->value : "paper-default";
      for (const auto& e : entries)
         apply(config, e);
      validate(config);
      return config;
   }

   ScenarioConfig load_config(const std::string& path)
   {
      std::ifstream in(path);
      if (!in)
         throw IoError("cannot read config file " + path);
      std::stringstream buf;
      buf << in.rdbuf();
      return parse_config(buf.str());
   }

   void validate(const ScenarioConfig& c)
   {
      const auto& w = c.workload;
      require(c.validators >= 1, "validators must be at least 1");
      require(c.ibft.blockInterval > 0, "block_interval_ms must be positive");
      require(c.ibft.baseRoundTimeout > 0, "base_round_timeout_ms must be positive");
      require(c.ibft.gasLimit > 0, "gas_limit must be positive");
      require(c.runDurationMs > 0, "run_duration_ms must be positive");
      require(c.privacy.tamperRate >= 0 && c.privacy.tamperRate <= 1, "tamper_rate must lie in [0, 1]");
      require(c.privacy.processing >= 0, "processing_ms must not be negative");
      require(c.privacy.deferTimeout > 0, "defer_timeout_ms must be positive");
      require(w.jitterMs >= 0, "jitter_ms must not be negative");

      require(w.providers <= w.domains, "providers exceed domains");
      require(w.publishPerProvider <= contracts::max_services_per_provider,
              "publish_per_provider " + std::to_string(w.publishPerProvider) +
                  " exceeds the cap of 5 services per provider");
      require(w.domains == 0 || c.members >= 1, "a workload needs at least one member node");
      require(w.selects <= c.consumers(), "selects exceed the number of consumers (one selection each)");
      require(w.selects == 0 || (w.providers > 0 && w.publishPerProvider > 0),
              "selects need at least one published service");
      require(w.selects == 0 || c.members >= 2, "selections pair domains on different member nodes; need 2 members");
      require(w.deploys <= w.selects, "deploys exceed selections (one deployment per group)");
      require(w.breachesPerGroup == 0 || w.deploys > 0 || w.selects == 0, "breach reports need deployed groups");
      require(w.batches <= w.deploys, "batches exceed deployed groups (one batch per group)");
      require(w.batches == 0 || w.batchSize >= 1, "batch_size must be at least 1");

      std::size_t nodes = c.validators + c.members;
      for (const auto& cr : c.crashes)
         require(cr.node < nodes && cr.at >= 0, "crash names node " + std::to_string(cr.node) + " outside the topology");
      for (const auto& p : c.partitions)
      {
         require(p.from <= p.to, "partition window ends before it starts");
         for (auto n : p.a)
            require(n < nodes, "partition names unknown node " + std::to_string(n));
         for (auto n : p.b)
            require(n < nodes, "partition names unknown node " + std::to_string(n));
      }
      for (const auto& [n, _] : c.byzantine)
         require(n < c.validators, "byzantine node " + std::to_string(n) + " is not a validator");
      require(c.byzantine.size() <= consensus::max_faulty(c.validators),
              "more byzantine validators than f = floor((n - 1) / 3)");
   }

   std::string to_text(const ScenarioConfig& c)
   {
      std::ostringstream o;
      o << "preset = " << c.preset << "\n"
        << "seed = " << c.seed << "\n"
        << "run_duration_ms = " << c.runDurationMs << "\n\n"
        << "[network]\n"
        << "validators = " << c.validators << "\n"
        << "members = " << c.members << "\n"
        << "block_interval_ms = " << c.ibft.blockInterval << "\n"
        << "base_round_timeout_ms = " << c.ibft.baseRoundTimeout << "\n"
        << "gas_limit = " << c.ibft.gasLimit << "\n\n"
        << "[latency]\n"
        << "consensus = " << c.latency.consensus.str() << "\n"
        << "enclave = " << c.latency.enclave.str() << "\n"
        << "rpc = " << c.latency.rpc.str() << "\n\n"
        << "[privacy]\n"
        << "tamper_rate = " << c.privacy.tamperRate << "\n"
        << "processing_ms = " << c.privacy.processing << "\n"
        << "marker_mode = " << node::to_string(c.privacy.markerMode) << "\n"
        << "defer_timeout_ms = " << c.privacy.deferTimeout << "\n\n"
        << "[workload]\n"
        << "domains = " << c.workload.domains << "\n"
        << "providers = " << c.workload.providers << "\n"
        << "publish_per_provider = " << c.workload.publishPerProvider << "\n"
        << "selects = " << c.workload.selects << "\n"
        << "deploys = " << c.workload.deploys << "\n"
        << "breaches_per_group = " << c.workload.breachesPerGroup << "\n"
        << "batches = " << c.workload.batches << "\n"
        << "batch_size = " << c.workload.batchSize << "\n"
        << "jitter_ms = " << c.workload.jitterMs << "\n\n"
        << "[faults]\n";
      for (const auto& cr : c.crashes)
         o << "crash = " << cr.node << "@" << cr.at << "\n";
      for (const auto& p : c.partitions)
         o << "partition = " << nodes_text(p.a) << "|" << nodes_text(p.b) << "@" << p.from << "-" << p.to << "\n";
      for (const auto& [n, b] : c.byzantine)
      {
         std::vector<std::string> names;
         if (b.equivocate)
            names.push_back("equivocate");
         if (b.doubleVote)
            names.push_back("double_vote");
         if (b.withholdVotes)
            names.push_back("withhold_votes");
         if (b.stripCertificates)
            names.push_back("strip_certificates");
         o << "byzantine = " << n << ":";
         for (std::size_t i = 0; i < names.size(); ++i)
            o << (i ? "," : "") << names[i];
         o << "\n";
      }
      return o.str();
   }
}  // namespace hybridchain::harness
