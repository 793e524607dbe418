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

#include "hybridchain/contracts/abi.hpp"

#include "hybridchain/encoding.hpp"

#include <algorithm>
#include <sstream>

namespace hybridchain::contracts
{
   // Defined in the source generated from core/abi/hybridchain.abi.
   extern const char* const builtin_abi_text;

   namespace
   {
      std::string_view trim(std::string_view s)
      {
         while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
         while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
            s.remove_suffix(1);
         return s;
      }

      std::vector<std::string_view> split(std::string_view s, char sep)
      {
         std::vector<std::string_view> out;
         while (true)
         {
            auto pos = s.find(sep);
            out.push_back(trim(s.substr(0, pos)));
            if (pos == std::string_view::npos)
               break;
            s.remove_prefix(pos + 1);
         }
         return out;
      }

      ArgType parse_type(std::string_view t, std::size_t line)
      {
         if (t == "u64")
            return ArgType::U64;
         if (t == "i64")
            return ArgType::I64;
         if (t == "bool")
            return ArgType::Bool;
         if (t == "string")
            return ArgType::String;
         if (t == "hash")
            return ArgType::Hash;
         if (t == "address")
            return ArgType::Address;
         if (t == "role")
            return ArgType::Role;
         if (t == "severity")
            return ArgType::Severity;
         if (t == "breach_list")
            return ArgType::BreachList;
         throw AbiParseError(line, "unknown type '" + std::string(t) + "'");
      }

      RoleRequirement parse_role(std::string_view r, std::size_t line)
      {
         if (r == "any")
            return RoleRequirement::Any;
         if (r == "consumer")
            return RoleRequirement::Consumer;
         if (r == "provider")
            return RoleRequirement::Provider;
         if (r == "member")
            return RoleRequirement::Member;
         throw AbiParseError(line, "unknown role '" + std::string(r) + "'");
      }

      std::uint64_t parse_count(std::string_view v, std::size_t line)
      {
         if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw AbiParseError(line, "expected a count, got '" + std::string(v) + "'");
         return std::stoull(std::string(v));
      }

      /// key=value attributes after the signature.
      void apply_attributes(AbiOperation& op, std::string_view rest, std::size_t line)
      {
         std::istringstream in{std::string(rest)};
         std::string        token;
         while (in >> token)
         {
            auto eq = token.find('=');
            if (eq == std::string::npos)
               throw AbiParseError(line, "expected key=value, got '" + token + "'");
            std::string_view key(token.data(), eq);
            std::string_view value(token.data() + eq + 1, token.size() - eq - 1);
            if (key == "writes")
               op.writes = parse_count(value, line);
            else if (key == "reads")
               op.reads = parse_count(value, line);
            else if (key == "role")
               op.role = parse_role(value, line);
            else if (key == "errors")
            {
               for (auto name : split(value, ','))
               {
                  auto code = contract_error_from_string(name);
                  if (!code)
                     throw AbiParseError(line, "unknown error code '" + std::string(name) + "'");
                  op.errors.push_back(*code);
               }
            }
            else
               throw AbiParseError(line, "unknown attribute '" + std::string(key) + "'");
         }
      }

      AbiMarker parse_marker(std::string_view rest, std::size_t line)
      {
         AbiOperation tmp;
         apply_attributes(tmp, rest, line);
         return {tmp.writes, tmp.reads};
      }

      void skip_arg(Decoder& d, ArgType type)
      {
         switch (type)
         {
            case ArgType::U64:
            case ArgType::I64:
               d.u64();
               break;
            case ArgType::Bool:
               d.boolean();
               break;
            case ArgType::String:
               d.str();
               break;
            case ArgType::Hash:
               d.raw(32);
               break;
            case ArgType::Address:
               d.raw(20);
               break;
            case ArgType::Role:
               if (d.u8() > 1)
                  throw ContractError(ContractErrorCode::InvalidArgument, "role out of range");
               break;
            case ArgType::Severity:
               if (d.u8() > 2)
                  throw ContractError(ContractErrorCode::InvalidArgument, "severity out of range");
               break;
            case ArgType::BreachList:
            {
               auto n = d.u32();
               for (std::uint32_t i = 0; i < n; ++i)
               {
                  d.raw(64);
                  skip_arg(d, ArgType::Severity);
                  d.u64();
               }
               break;
            }
         }
      }
   }  // namespace

   Abi Abi::parse(std::string_view text)
   {
      Abi                         abi;
      std::optional<std::string>  contract;
      Visibility                  visibility = Visibility::Public;
      bool                        sawPlain = false, sawSummary = false;
      std::size_t                 lineNo = 0;

      for (auto raw : split(text, '\n'))
      {
         ++lineNo;
         auto line = trim(raw.substr(0, raw.find('#')));
         if (line.empty())
            continue;
         auto        sp      = line.find(' ');
         std::string keyword(line.substr(0, sp));
         auto        rest = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));

         if (keyword == "contract")
         {
            if (contract)
               throw AbiParseError(lineNo, "nested contract");
            auto parts = split(rest, ' ');
            if (parts.size() != 2 || parts[0].empty())
               throw AbiParseError(lineNo, "expected 'contract <Name> <public|private>'");
            if (parts[1] == "public")
               visibility = Visibility::Public;
            else if (parts[1] == "private")
               visibility = Visibility::Private;
            else
               throw AbiParseError(lineNo, "unknown visibility '" + std::string(parts[1]) + "'");
            contract = std::string(parts[0]);
         }
         else if (keyword == "end")
         {
            if (!contract)
               throw AbiParseError(lineNo, "'end' outside a contract");
            contract.reset();
         }
         else if (keyword == "op" || keyword == "query")
         {
            if (!contract)
               throw AbiParseError(lineNo, "operation outside a contract");
            auto open  = rest.find('(');
            auto close = rest.find(')');
            if (open == std::string_view::npos || close == std::string_view::npos || close < open)
               throw AbiParseError(lineNo, "expected '<name>(<args>)'");
            AbiOperation op;
            op.contract   = *contract;
            op.visibility = visibility;
            op.query      = keyword == "query";
            op.name       = std::string(trim(rest.substr(0, open)));
            if (op.name.empty())
               throw AbiParseError(lineNo, "missing operation name");
            if (abi.find(op.name))
               throw AbiParseError(lineNo, "duplicate operation '" + op.name + "'");
            auto argText = trim(rest.substr(open + 1, close - open - 1));
            if (!argText.empty())
               for (auto arg : split(argText, ','))
               {
                  auto colon = arg.find(':');
                  if (colon == std::string_view::npos)
                     throw AbiParseError(lineNo, "expected '<name>: <type>'");
                  op.args.push_back({std::string(trim(arg.substr(0, colon))),
                                     parse_type(trim(arg.substr(colon + 1)), lineNo)});
               }
            apply_attributes(op, rest.substr(close + 1), lineNo);
            abi.ops_.push_back(std::move(op));
         }
         else if (keyword == "marker")
         {
            auto sp2  = rest.find(' ');
            auto kind = rest.substr(0, sp2);
            auto tail = sp2 == std::string_view::npos ? std::string_view{} : rest.substr(sp2);
            if (kind == "plain")
            {
               abi.plainMarker_ = parse_marker(tail, lineNo);
               sawPlain         = true;
            }
            else if (kind == "summary")
            {
               abi.summaryMarker_ = parse_marker(tail, lineNo);
               sawSummary         = true;
            }
            else
               throw AbiParseError(lineNo, "unknown marker kind '" + std::string(kind) + "'");
         }
         else
            throw AbiParseError(lineNo, "unknown keyword '" + keyword + "'");
      }
      if (contract)
         throw AbiParseError(lineNo, "unterminated contract '" + *contract + "'");
      if (!sawPlain || !sawSummary)
         throw AbiParseError(lineNo, "both marker kinds must be declared");
      return abi;
   }

   std::string_view Abi::builtin_text() { return builtin_abi_text; }

   const Abi& Abi::builtin()
   {
      static const Abi abi = parse(builtin_abi_text);
      return abi;
   }

   const AbiOperation* Abi::find(std::string_view method) const
   {
      for (const auto& op : ops_)
         if (op.name == method)
            return &op;
      return nullptr;
   }

   const std::string* Abi::contract_of(std::string_view method) const
   {
      const auto* op = find(method);
      return op ? &op->contract : nullptr;
   }

   std::vector<std::string> Abi::contracts(Visibility visibility) const
   {
      std::vector<std::string> out;
      for (const auto& op : ops_)
         if (op.visibility == visibility && std::find(out.begin(), out.end(), op.contract) == out.end())
            out.push_back(op.contract);
      return out;
   }

   void Abi::validate_args(const AbiOperation& op, ByteView args) const
   {
      Decoder d(args);
      for (const auto& arg : op.args)
         skip_arg(d, arg.type);
      d.expect_done();
   }

   std::uint64_t Abi::static_gas(const AbiOperation& op, const GasSchedule& schedule) const
   {
      return gas_of(op.name, op.writes, op.reads, schedule);
   }

   std::uint64_t Abi::marker_gas(bool withSummary, const GasSchedule& schedule) const
   {
      const auto& m = withSummary ? summaryMarker_ : plainMarker_;
      return gas_of(marker_operation, m.writes, m.reads, schedule);
   }
}  // namespace hybridchain::contracts
