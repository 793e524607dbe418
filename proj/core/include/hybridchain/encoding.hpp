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

#include <optional>
#include <stdexcept>
#include <string>

// Canonical encoding: fields in declaration order, big-endian fixed-width
// integers, u32 length prefixes for variable-length byte strings and lists.
// docs/encoding.md is the normative description.
namespace hybridchain
{
   struct DecodeError : std::runtime_error
   {
      using std::runtime_error::runtime_error;
   };

   class Encoder
   {
     public:
      Encoder& u8(std::uint8_t v);
      Encoder& u32(std::uint32_t v);
      Encoder& u64(std::uint64_t v);
      Encoder& i64(std::int64_t v) { return u64(static_cast<std::uint64_t>(v)); }
      Encoder& boolean(bool v) { return u8(v ? 1 : 0); }
      /// Length-prefixed byte string.
      Encoder& bytes(ByteView v);
      Encoder& str(std::string_view v) { return bytes(as_bytes(v)); }
      /// Raw bytes with no prefix; only for fixed-width values.
      Encoder& raw(ByteView v);

      template <std::size_t N, typename Tag>
      Encoder& fixed(const FixedBytes<N, Tag>& v)
      {
         return raw(v.view());
      }

      const Bytes& data() const& { return out_; }
      Bytes        take() && { return std::move(out_); }

     private:
      Bytes out_;
   };

   class Decoder
   {
     public:
      explicit Decoder(ByteView in) : in_(in) {}

      std::uint8_t  u8();
      std::uint32_t u32();
      std::uint64_t u64();
      std::int64_t  i64() { return static_cast<std::int64_t>(u64()); }
      bool          boolean();
      Bytes         bytes();
      std::string   str();
      ByteView      raw(std::size_t n);

      template <typename Fixed>
      Fixed fixed()
      {
         return Fixed::from_span(raw(Fixed::size_bytes));
      }

      bool        done() const { return pos_ == in_.size(); }
      std::size_t remaining() const { return in_.size() - pos_; }
      /// Throws unless every byte was consumed.
      void expect_done() const;

     private:
      void need(std::size_t n) const;

      ByteView    in_;
      std::size_t pos_ = 0;
   };
}  // namespace hybridchain
