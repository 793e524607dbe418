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

#include "hybridchain/sim/latency.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hybridchain::sim
{
   namespace
   {
      double parse_number(std::string_view s)
      {
         while (!s.empty() && s.front() == ' ')
            s.remove_prefix(1);
         while (!s.empty() && s.back() == ' ')
            s.remove_suffix(1);
         double v   = 0;
         auto   res = std::from_chars(s.data(), s.data() + s.size(), v);
         if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(v))
            throw std::invalid_argument("not a number: '" + std::string(s) + "'");
         return v;
      }

      std::string format(double v)
      {
         std::ostringstream out;
         out << v;
         return out.str();
      }
   }  // namespace

   std::string_view to_string(LinkClass link)
   {
      switch (link)
      {
         case LinkClass::Consensus:
            return "consensus";
         case LinkClass::Enclave:
            return "enclave";
         case LinkClass::Rpc:
            return "rpc";
      }
      return "unknown";
   }

   LatencyDist LatencyDist::fixed(double v)
   {
      if (v < 0)
         throw std::invalid_argument("fixed latency must be non-negative");
      return {Kind::Fixed, v, 0};
   }

   LatencyDist LatencyDist::uniform(double lo, double hi)
   {
      if (lo < 0 || hi < lo)
         throw std::invalid_argument("uniform latency needs 0 <= lo <= hi");
      return {Kind::Uniform, lo, hi};
   }

   LatencyDist LatencyDist::lognormal(double mu, double sigma)
   {
      if (sigma < 0)
         throw std::invalid_argument("lognormal sigma must be non-negative");
      return {Kind::LogNormal, mu, sigma};
   }

   LatencyDist LatencyDist::parse(std::string_view text)
   {
      auto open  = text.find('(');
      auto close = text.rfind(')');
      if (open == std::string_view::npos || close != text.size() - 1 || close < open)
         throw std::invalid_argument("expected <kind>(<args>), got '" + std::string(text) + "'");
      auto name = text.substr(0, open);
      while (!name.empty() && name.back() == ' ')
         name.remove_suffix(1);
      std::vector<double> args;
      auto                inner = text.substr(open + 1, close - open - 1);
      while (true)
      {
         auto comma = inner.find(',');
         args.push_back(parse_number(inner.substr(0, comma)));
         if (comma == std::string_view::npos)
            break;
         inner.remove_prefix(comma + 1);
      }
      if (name == "fixed" && args.size() == 1)
         return fixed(args[0]);
      if (name == "uniform" && args.size() == 2)
         return uniform(args[0], args[1]);
      if (name == "lognormal" && args.size() == 2)
         return lognormal(args[0], args[1]);
      throw std::invalid_argument("unknown latency model '" + std::string(text) + "'");
   }

   Millis LatencyDist::sample(Rng& rng) const
   {
      double v = 0;
      switch (kind_)
      {
         case Kind::Fixed:
            v = a_;
            break;
         case Kind::Uniform:
            v = a_ + (b_ - a_) * rng.uniform01();
            break;
         case Kind::LogNormal:
            v = std::exp(a_ + b_ * rng.normal());
            break;
      }
      return std::max<Millis>(0, std::llround(v));
   }

   double LatencyDist::mean() const
   {
      switch (kind_)
      {
         case Kind::Fixed:
            return a_;
         case Kind::Uniform:
            return (a_ + b_) / 2;
         case Kind::LogNormal:
            return std::exp(a_ + b_ * b_ / 2);
      }
      return 0;
   }

   std::string LatencyDist::str() const
   {
      switch (kind_)
      {
         case Kind::Fixed:
            return "fixed(" + format(a_) + ")";
         case Kind::Uniform:
            return "uniform(" + format(a_) + "," + format(b_) + ")";
         case Kind::LogNormal:
            return "lognormal(" + format(a_) + "," + format(b_) + ")";
      }
      return "unknown";
   }

   const LatencyDist& LatencyModel::of(LinkClass link) const
   {
      switch (link)
      {
         case LinkClass::Consensus:
            return consensus;
         case LinkClass::Enclave:
            return enclave;
         case LinkClass::Rpc:
            return rpc;
      }
      return consensus;
   }
}  // namespace hybridchain::sim
