// Copyright 2026 The tamewild Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tamewild/error.hpp"

namespace tamewild {

/// Elementary-operation counter standing in for a resource-bounded machine
/// class: computations charge units here, and an optional budget turns
/// overruns into BudgetExceeded.
class StepCounter {
 public:
  StepCounter() = default;
  explicit StepCounter(std::optional<std::uint64_t> budget) : budget_(budget) {}

  void charge(std::uint64_t units) {
    used_ += units;
    if (budget_ && used_ > *budget_) {
      throw Error(Errc::BudgetExceeded, std::to_string(used_) + " steps exceed the budget of " +
                                            std::to_string(*budget_));
    }
  }

  std::uint64_t used() const noexcept { return used_; }
  std::optional<std::uint64_t> budget() const noexcept { return budget_; }

 private:
  std::optional<std::uint64_t> budget_;
  std::uint64_t used_ = 0;
};

}  // namespace tamewild
