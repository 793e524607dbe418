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

#include "hybridchain/encoding.hpp"

namespace hybridchain
{
   Encoder& Encoder::u8(std::uint8_t v)
   {
      out_.push_back(v);
      return *this;
   }

   Encoder& Encoder::u32(std::uint32_t v)
   {
      for (int shift = 24; shift >= 0; shift -= 8)
         out_.push_back(static_cast<std::uint8_t>(v >> shift));
      return *this;
   }

   Encoder& Encoder::u64(std::uint64_t v)
   {
      for (int shift = 56; shift >= 0; shift -= 8)
         out_.push_back(static_cast<std::uint8_t>(v >> shift));
      return *this;
   }

   Encoder& Encoder::bytes(ByteView v)
   {
      if (v.size() > 0xffffffffu)
         throw std::length_error("Encoder::bytes: value too long");
      u32(static_cast<std::uint32_t>(v.size()));
      return raw(v);
   }

   Encoder& Encoder::raw(ByteView v)
   {
      out_.insert(out_.end(), v.begin(), v.end());
      return *this;
   }

   void Decoder::need(std::size_t n) const
   {
      if (remaining() < n)
         throw DecodeError("truncated input: need " + std::to_string(n) + " bytes, have " +
                           std::to_string(remaining()));
   }

   std::uint8_t Decoder::u8()
   {
      need(1);
      return in_[pos_++];
   }

   std::uint32_t Decoder::u32()
   {
      need(4);
      std::uint32_t v = 0;
      for (int i = 0; i < 4; ++i)
         v = (v << 8) | in_[pos_++];
      return v;
   }

   std::uint64_t Decoder::u64()
   {
      need(8);
      std::uint64_t v = 0;
      for (int i = 0; i < 8; ++i)
         v = (v << 8) | in_[pos_++];
      return v;
   }

   bool Decoder::boolean()
   {
      auto v = u8();
      if (v > 1)
         throw DecodeError("invalid boolean byte");
      return v == 1;
   }

   Bytes Decoder::bytes()
   {
      auto n    = u32();
      auto view = raw(n);
      return {view.begin(), view.end()};
   }

   std::string Decoder::str()
   {
      auto n    = u32();
      auto view = raw(n);
      return {reinterpret_cast<const char*>(view.data()), view.size()};
   }

   ByteView Decoder::raw(std::size_t n)
   {
      need(n);
      auto out = in_.subspan(pos_, n);
      pos_ += n;
      return out;
   }

   void Decoder::expect_done() const
   {
      if (!done())
         throw DecodeError(std::to_string(remaining()) + " trailing bytes");
   }
}  // namespace hybridchain
