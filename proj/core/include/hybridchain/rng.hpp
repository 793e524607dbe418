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

#include "hybridchain/bytes.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace hybridchain
{
   /// Seedable 64-bit generator (std::mt19937_64, whose output sequence is fixed
   /// by the standard). Conversions to doubles and ranges are done here rather
   /// than through <random> distributions, which are implementation-defined.
   class Rng
   {
     public:
      explicit Rng(std::uint64_t seed) : engine_(seed) {}

      std::uint64_t next() { return engine_(); }

      /// Uniform double in [0, 1) from the top 53 bits.
      double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

      /// Uniform integer in [lo, hi] (inclusive).
      std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

      /// Standard normal via Box-Muller (one value per call, two uniforms consumed).
      double normal();

      bool bernoulli(double p) { return uniform01() < p; }

      template <std::size_t N, typename Tag>
      FixedBytes<N, Tag> fill()
      {
         FixedBytes<N, Tag> out;
         for (std::size_t i = 0; i < N; i += 8)
         {
            auto word = next();
            for (std::size_t j = 0; j < 8 && i + j < N; ++j)
               out.raw()[i + j] = static_cast<std::uint8_t>(word >> (8 * j));
         }
         return out;
      }

     private:
      std::mt19937_64 engine_;
   };

   /// Derives an independent stream seed: first 8 bytes (big-endian) of
   /// SHA-256(be64 master || u32 length-prefixed label || extra).
   std::uint64_t derive_seed(std::uint64_t master, std::string_view label, ByteView extra = {});

   inline Rng derive_rng(std::uint64_t master, std::string_view label, ByteView extra = {})
   {
      return Rng(derive_seed(master, label, extra));
   }
}  // namespace hybridchain
