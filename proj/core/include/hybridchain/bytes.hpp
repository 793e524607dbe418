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

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hybridchain
{
   using Bytes    = std::vector<std::uint8_t>;
   using ByteView = std::span<const std::uint8_t>;

   /// Virtual simulation time in integer milliseconds.
   using Millis = std::int64_t;

   /// Index of a simulated node: validators first, then member nodes.
   using NodeId = std::uint32_t;

   std::string to_hex(ByteView bytes);
   Bytes       from_hex(std::string_view hex);

   inline ByteView as_bytes(std::string_view s)
   {
      return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
   }

   inline void append(Bytes& out, ByteView more) { out.insert(out.end(), more.begin(), more.end()); }

   /// Fixed-width byte string. The tag keeps addresses, digests and keys from
   /// being mixed up even when their widths coincide.
   template <std::size_t N, typename Tag>
   class FixedBytes
   {
     public:
      static constexpr std::size_t size_bytes = N;

      constexpr FixedBytes() = default;
      explicit FixedBytes(const std::array<std::uint8_t, N>& raw) : data_(raw) {}

      static FixedBytes from_span(ByteView raw)
      {
         if (raw.size() != N)
            throw std::invalid_argument("FixedBytes: expected " + std::to_string(N) + " bytes, got " +
                                        std::to_string(raw.size()));
         FixedBytes out;
         std::copy(raw.begin(), raw.end(), out.data_.begin());
         return out;
      }

      static FixedBytes from_hex(std::string_view hex)
      {
         if (hex.starts_with("0x"))
            hex.remove_prefix(2);
         return from_span(hybridchain::from_hex(hex));
      }

      ByteView                              view() const { return {data_.data(), N}; }
      const std::array<std::uint8_t, N>&    raw() const { return data_; }
      std::array<std::uint8_t, N>&          raw() { return data_; }
      std::uint8_t*                         data() { return data_.data(); }
      const std::uint8_t*                   data() const { return data_.data(); }
      constexpr std::size_t                 size() const { return N; }

      bool is_zero() const
      {
         return std::all_of(data_.begin(), data_.end(), [](std::uint8_t b) { return b == 0; });
      }

      /// 0x-prefixed lowercase hex.
      std::string str() const { return "0x" + to_hex(view()); }

      friend auto operator<=>(const FixedBytes&, const FixedBytes&) = default;
      friend bool operator==(const FixedBytes&, const FixedBytes&)  = default;

     private:
      std::array<std::uint8_t, N> data_{};
   };

   struct AddressTag;
   struct HashTag;

   using Address = FixedBytes<20, AddressTag>;
   using Hash    = FixedBytes<32, HashTag>;

   /// Searches `haystack` for any occurrence of `needle`.
   bool contains_subsequence(ByteView haystack, ByteView needle);
}  // namespace hybridchain
