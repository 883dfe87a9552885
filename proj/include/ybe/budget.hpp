/*
 *   Copyright 2026 The ybe-growth Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ybe {

/// A search exceeded its state budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultWordBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultBallBudget = 100'000'000;
inline constexpr std::uint64_t kDefaultDefectBudget = 10'000'000;

/// YBE_GROWTH_BUDGET overrides a default budget when set to a positive integer.
inline std::uint64_t budget_from_env(std::uint64_t fallback) {
  const char* v = std::getenv("YBE_GROWTH_BUDGET");
  if (v == nullptr || *v == '\0') return fallback;
  try {
    const long long parsed = std::stoll(v);
    return parsed > 0 ? static_cast<std::uint64_t>(parsed) : fallback;
  } catch (const std::exception&) {
    return fallback;
  }
}

}  // namespace ybe
