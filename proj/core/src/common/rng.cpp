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

#include "hybridchain/rng.hpp"

#include "hybridchain/crypto.hpp"
#include "hybridchain/encoding.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hybridchain
{
   std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi)
   {
      if (hi < lo)
         throw std::invalid_argument("uniform_int: empty range");
      auto span = static_cast<double>(hi - lo) + 1.0;
      auto v    = lo + static_cast<std::int64_t>(std::floor(uniform01() * span));
      return v > hi ? hi : v;
   }

   double Rng::normal()
   {
      // 1 - u keeps the log argument in (0, 1].
      double u1 = 1.0 - uniform01();
      double u2 = uniform01();
      return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
   }

   std::uint64_t derive_seed(std::uint64_t master, std::string_view label, ByteView extra)
   {
      Encoder e;
      e.u64(master).str(label).raw(extra);
      auto          digest = crypto::sha256(e.data());
      std::uint64_t seed   = 0;
      for (int i = 0; i < 8; ++i)
         seed = (seed << 8) | digest.raw()[i];
      return seed;
   }
}  // namespace hybridchain
