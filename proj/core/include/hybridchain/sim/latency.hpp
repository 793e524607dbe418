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

#include "hybridchain/rng.hpp"

#include <string>
#include <string_view>

namespace hybridchain::sim
{
   enum class LinkClass : std::uint8_t
   {
      Consensus = 0,
      Enclave   = 1,
      Rpc       = 2,
   };

   std::string_view to_string(LinkClass link);

   /// Per-hop delay distribution in milliseconds. Samples are rounded to the
   /// nearest integer millisecond and are never negative.
   class LatencyDist
   {
     public:
      enum class Kind
      {
         Fixed,
         Uniform,
         LogNormal,
      };

      static LatencyDist fixed(double v);
      static LatencyDist uniform(double lo, double hi);
      /// exp(N(mu, sigma^2)).
      static LatencyDist lognormal(double mu, double sigma);

      /// Accepts "fixed(v)", "uniform(lo,hi)" and "lognormal(mu,sigma)".
      /// Throws std::invalid_argument.
      static LatencyDist parse(std::string_view text);

      Millis      sample(Rng& rng) const;
      double      mean() const;
      std::string str() const;
      Kind        kind() const { return kind_; }
      double      a() const { return a_; }
      double      b() const { return b_; }

      friend bool operator==(const LatencyDist&, const LatencyDist&) = default;

     private:
      LatencyDist(Kind k, double a, double b) : kind_(k), a_(a), b_(b) {}

      Kind   kind_ = Kind::Fixed;
      double a_    = 0;
      double b_    = 0;
   };

   struct LatencyModel
   {
      LatencyDist consensus = LatencyDist::uniform(450, 700);
      LatencyDist enclave   = LatencyDist::uniform(400, 2600);
      LatencyDist rpc       = LatencyDist::uniform(100, 300);

      const LatencyDist& of(LinkClass link) const;
   };
}  // namespace hybridchain::sim
