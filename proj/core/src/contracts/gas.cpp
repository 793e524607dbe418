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

#include "hybridchain/contracts/gas.hpp"

#include "hybridchain/contracts/records.hpp"

namespace hybridchain::contracts
{
   const GasSchedule& default_gas_schedule()
   {
      static const GasSchedule schedule{
          {
              {"register", 21'000},
              {"publish_service", 21'000},
              {"select_service", 21'000},
              {std::string(marker_operation), 21'000},
          },
          20'000,
          2'100,
      };
      return schedule;
   }

   std::uint64_t gas_of(std::string_view operation, std::uint64_t writes, std::uint64_t reads,
                        const GasSchedule& schedule)
   {
      auto it = schedule.baseCost.find(operation);
      if (it == schedule.baseCost.end())
         throw ContractError(ContractErrorCode::UnknownOperation, std::string(operation));
      return it->second + writes * schedule.perStorageWrite + reads * schedule.perStorageRead;
   }
}  // namespace hybridchain::contracts
