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
#include "hybridchain/harness/scenario.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

namespace fs = std::filesystem;
using namespace hybridchain;

namespace
{
   constexpr int exit_ok         = 0;
   constexpr int exit_error      = 1;
   constexpr int exit_validation = 2;
   constexpr int exit_violation  = 3;

   void write_run(const harness::RunResult& r, const harness::ScenarioConfig& cfg, const fs::path& dir, bool traced)
   {
      fs::create_directories(dir);
      harness::write_csv(r.samples, dir / "samples.csv");
      harness::write_summary(r.report, cfg, dir / "summary.txt");
      if (traced)
      {
         harness::write_file(dir / "trace.tsv", r.trace);
         harness::write_file(dir / "consensus_trace.tsv", r.consensusTrace);
      }
   }

   /// Prints incidents and rejections; returns true when the run violated
   /// safety, private-state agreement or isolation.
   bool report_incidents(const harness::RunResult& r, std::string_view label)
   {
      for (const auto& s : r.safety)
         std::cerr << label << "safety violation at height " << s.height << " on " << sim::node_name(s.node) << ": "
                   << s.detail << "\n";
      for (const auto& d : r.divergence)
         std::cerr << label << "divergence in group " << d.groupId.str() << ": " << d.detail << "\n";
      if (r.isolation)
         for (const auto& h : r.isolation->hits)
            std::cerr << label << "isolation leak: " << h.needle << " of group " << h.groupId.str() << " in "
                      << h.where << "\n";
      if (!r.rejections.empty())
         std::cerr << label << r.rejections.size() << " request(s) rejected at the RPC layer\n";
      if (!r.workloadComplete)
         std::cerr << label << "workload incomplete at t=" << r.endTime << " ms\n";
      return r.violated() || (r.isolation && !r.isolation->clean());
   }

   std::vector<Millis> parse_values(const std::string& text)
   {
      std::vector<Millis> out;
      std::size_t         start = 0;
      while (start <= text.size())
      {
         auto end  = text.find(',', start);
         auto item = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
         try
         {
            std::size_t used = 0;
            auto        v    = std::stoll(item, &used);
            if (used != item.size())
               throw std::invalid_argument(item);
            out.push_back(v);
         }
         catch (const std::logic_error&)
         {
            throw harness::ValidationError("sweep value '" + item + "' is not an integer");
         }
         if (end == std::string::npos)
            break;
         start = end + 1;
      }
      return out;
   }
}  // namespace

int main(int argc, char** argv)
{
   CLI::App app{"hybridchain simulator: runs agreement workloads over an IBFT network with privacy groups"};
   app.require_subcommand(1);

   std::string   configPath;
   std::string   outDir;
   std::uint64_t seed = 0;
   bool          trace = false;
   bool          scan  = false;

   auto* run = app.add_subcommand("run", "run one scenario and write samples.csv and summary.txt");
   run->add_option("--config", configPath, "scenario config file")->required();
   auto* seedOpt = run->add_option("--seed", seed, "run seed (overrides the config)");
   run->add_option("--out", outDir, "output directory")->required();
   run->add_flag("--trace", trace, "also write trace.tsv and consensus_trace.tsv");
   run->add_flag("--isolation-scan", scan, "byte-scan non-member stores and all traffic for group secrets");

   std::string param;
   std::string values;
   auto*       sw = app.add_subcommand("sweep", "run one scenario per parameter value");
   sw->add_option("--config", configPath, "scenario config file")->required();
   auto* sweepSeed = sw->add_option("--seed", seed, "run seed (overrides the config)");
   sw->add_option("--param", param, "parameter to vary (block-interval)")->required();
   sw->add_option("--values", values, "comma-separated values in milliseconds")->required();
   sw->add_option("--out", outDir, "output directory")->required();
   sw->add_flag("--trace", trace, "also write traces for every point");

   std::string validatePath;
   auto*       val = app.add_subcommand("validate-config", "parse and validate a config file");
   val->add_option("path", validatePath, "scenario config file")->required();

   try
   {
      app.parse(argc, argv);
   }
   catch (const CLI::CallForHelp& e)
   {
      return app.exit(e);
   }
   catch (const CLI::CallForAllHelp& e)
   {
      return app.exit(e);
   }
   catch (const CLI::ParseError& e)
   {
      app.exit(e);
      return exit_validation;
   }

   harness::ScenarioConfig cfg;
   try
   {
      cfg = harness::load_config(val->parsed() ? validatePath : configPath);
      if ((run->parsed() && seedOpt->count() > 0) || (sw->parsed() && sweepSeed->count() > 0))
         cfg.seed = seed;
   }
   catch (const std::exception& e)
   {
      std::cerr << "invalid config: " << e.what() << "\n";
      return exit_validation;
   }

   if (val->parsed())
   {
      std::cout << "ok: preset " << cfg.preset << ", " << cfg.validators << " validators, " << cfg.members
                << " members, block interval " << cfg.ibft.blockInterval << " ms\n";
      return exit_ok;
   }

   try
   {
      harness::RunOptions options;
      options.trace         = trace;
      options.isolationScan = scan;

      if (run->parsed())
      {
         auto result = harness::run_scenario(cfg, options);
         write_run(result, cfg, outDir, trace);
         bool bad = report_incidents(result, "");
         std::cout << "wrote " << result.samples.size() << " samples to " << (fs::path(outDir) / "samples.csv").string()
                   << "\n";
         return bad ? exit_violation : exit_ok;
      }

      std::vector<Millis> points;
      try
      {
         points = parse_values(values);
      }
      catch (const harness::ValidationError& e)
      {
         std::cerr << "invalid sweep: " << e.what() << "\n";
         return exit_validation;
      }
      harness::SweepReport report;
      try
      {
         report = harness::sweep(cfg, param, points, options);
      }
      catch (const harness::ValidationError& e)
      {
         std::cerr << "invalid sweep: " << e.what() << "\n";
         return exit_validation;
      }
      bool bad = false;
      for (const auto& p : report.points)
      {
         auto pointCfg            = cfg;
         pointCfg.ibft.blockInterval = p.value;
         write_run(p.result, pointCfg, fs::path(outDir) / (param + "-" + std::to_string(p.value)), trace);
         bad = report_incidents(p.result, param + "=" + std::to_string(p.value) + ": ") || bad;
      }
      harness::write_file(fs::path(outDir) / "sweep.txt", report.text());
      std::cout << "wrote " << report.points.size() << " sweep points to " << outDir << "\n";
      return bad ? exit_violation : exit_ok;
   }
   catch (const std::exception& e)
   {
      std::cerr << "error: " << e.what() << "\n";
      return exit_error;
   }
}
