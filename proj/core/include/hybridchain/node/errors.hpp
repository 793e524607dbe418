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

#include <stdexcept>
#include <string>
#include <string_view>

namespace hybridchain::node
{
   enum class NodeErrorCode
   {
      KeyMismatch,
      UnknownCredential,
      RoleAlreadyBound,
      MalformedRequest,
      RoleViolation,
      UnknownGroup,
      UnknownMethod,
      NotGroupMember,
      VisibilityViolation,
   };

   std::string_view to_string(NodeErrorCode code);

   struct NodeError : std::runtime_error
   {
      NodeError(NodeErrorCode c, const std::string& what)
          : std::runtime_error(std::string(to_string(c)) + ": " + what), code(c)
      {
      }
      NodeErrorCode code;
   };
}  // namespace hybridchain::node
