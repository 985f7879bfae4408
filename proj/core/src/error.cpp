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

#include "tamewild/error.hpp"

namespace tamewild {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::ModulusMismatch: return "ModulusMismatch";
    case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::BothZero: return "BothZero";
    case Errc::DuplicateNode: return "DuplicateNode";
    case Errc::EmptyTable: return "EmptyTable";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotSquare: return "NotSquare";
    case Errc::Singular: return "Singular";
    case Errc::SingularPolyMatrix: return "SingularPolyMatrix";
    case Errc::InvalidChain: return "InvalidChain";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NondeterministicTable: return "NondeterministicTable";
    case Errc::IncompleteTable: return "IncompleteTable";
    case Errc::RunTooLong: return "RunTooLong";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace tamewild
