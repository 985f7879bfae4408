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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tamewild/matrix.hpp"
#include "tamewild/poly.hpp"

namespace tamewild {

/// Output cell (component k, row i, column j) of a b-tuple of n x n matrices.
struct CellRef {
  std::size_t component = 0;
  std::size_t row = 0;
  std::size_t col = 0;
};

/// On reading `read` from the register: write `write` back (and into the
/// state's cell, if any) and move to `next`; no next state halts the run.
struct Transition {
  std::uint32_t read = 0;
  std::uint32_t write = 0;
  std::optional<std::size_t> next;
};

struct TransducerState {
  std::string label;
  std::optional<CellRef> writes;
  std::vector<Transition> table;
};

/// Table-driven machine over a single F_p register. The register starts at
/// the input value; every step rewrites it through the current state's
/// table. Output cells start at zero.
class FieldTransducer {
 public:
  static constexpr std::size_t kMaxRunLength = 4;
  static constexpr std::uint32_t kMaxModulus = 7;

  /// Validates totality and determinism of every table, state and cell
  /// references, run length <= 4 and p <= 7.
  FieldTransducer(PrimeField field, std::size_t components, std::size_t n,
                  std::vector<TransducerState> states, std::size_t start, std::size_t max_steps);

  PrimeField field() const noexcept { return field_; }
  std::size_t components() const noexcept { return components_; }
  std::size_t size() const noexcept { return n_; }
  const std::vector<TransducerState>& states() const noexcept { return states_; }
  std::size_t start() const noexcept { return start_; }
  std::size_t max_steps() const noexcept { return max_steps_; }
  std::size_t cell_count() const noexcept { return components_ * n_ * n_; }
  std::size_t cell_offset(const CellRef& c) const noexcept {
    return (c.component * n_ + c.row) * n_ + c.col;
  }

  const Transition& transition(std::size_t state, const Fe& read) const;

  /// Direct execution; RunTooLong if the machine has not halted after
  /// max_steps steps.
  std::vector<Fe> run(const Fe& input) const;
  MatrixTuple run_tuple(const Fe& input) const;

 private:
  PrimeField field_;
  std::size_t components_;
  std::size_t n_;
  std::vector<TransducerState> states_;
  std::size_t start_;
  std::size_t max_steps_;
  // lookup_[s][c] indexes states_[s].table by read value.
  std::vector<std::vector<std::size_t>> lookup_;
};

/// One polynomial per output cell, degree < p, agreeing with the machine on
/// every input.
struct CompiledTransducer {
  PrimeField field;
  std::size_t components;
  std::size_t n;
  std::vector<Poly> cells;

  const Poly& cell(std::size_t component, std::size_t row, std::size_t col) const {
    return cells[(component * n + row) * n + col];
  }
  /// (sum_{i,j} P^k_{i,j}(c) I_{i,j})_k.
  MatrixTuple assemble(const Fe& input) const;
};

/// Interpolating polynomial of a state's write table over all of F_p.
Poly transition_polynomial(const FieldTransducer& m, std::size_t state);

/// Compiles the machine by symbolic execution: each state's write table is
/// interpolated and composed onto the register polynomial; a branch on the
/// value read is carried as an interpolated 0/1 guard polynomial composed the
/// same way; finished branches are recombined as sum(guard * cell).
/// Everything is reduced modulo x^p - x.
CompiledTransducer compile_transducer(const FieldTransducer& m);

}  // namespace tamewild
