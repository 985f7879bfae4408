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

#include "tamewild/transducer.hpp"

#include <map>
#include <utility>

namespace tamewild {

FieldTransducer::FieldTransducer(PrimeField field, std::size_t components, std::size_t n,
                                 std::vector<TransducerState> states, std::size_t start,
                                 std::size_t max_steps)
    : field_(field), components_(components), n_(n), states_(std::move(states)), start_(start),
      max_steps_(max_steps) {
  const std::uint32_t p = field.modulus();
  if (p > kMaxModulus) throw Error(Errc::TooLarge, "transducers are limited to p <= 7");
  if (max_steps_ > kMaxRunLength) {
    throw Error(Errc::RunTooLong, "run length bound " + std::to_string(max_steps_) + " exceeds 4");
  }
  if (components_ == 0 || n_ == 0) throw Error(Errc::ShapeMismatch, "output tuple must be non-empty");
  if (states_.empty() || start_ >= states_.size()) throw Error(Errc::ShapeMismatch, "start state out of range");

  lookup_.assign(states_.size(), std::vector<std::size_t>(p, static_cast<std::size_t>(-1)));
  for (std::size_t s = 0; s < states_.size(); ++s) {
    const TransducerState& st = states_[s];
    if (st.writes && (st.writes->component >= components_ || st.writes->row >= n_ || st.writes->col >= n_)) {
      throw Error(Errc::ShapeMismatch, "state " + st.label + " writes outside the output tuple");
    }
    for (std::size_t r = 0; r < st.table.size(); ++r) {
      const Transition& t = st.table[r];
      if (t.read >= p || t.write >= p) {
        throw Error(Errc::IncompleteTable, "state " + st.label + " uses a value outside F_" + std::to_string(p));
      }
      if (t.next && *t.next >= states_.size()) {
        throw Error(Errc::ShapeMismatch, "state " + st.label + " jumps to an unknown state");
      }
      if (lookup_[s][t.read] != static_cast<std::size_t>(-1)) {
        throw Error(Errc::NondeterministicTable,
                    "state " + st.label + " has two rules for reading " + std::to_string(t.read));
      }
      lookup_[s][t.read] = r;
    }
    for (std::uint32_t c = 0; c < p; ++c) {
      if (lookup_[s][c] == static_cast<std::size_t>(-1)) {
        throw Error(Errc::IncompleteTable, "state " + st.label + " has no rule for reading " + std::to_string(c));
      }
    }
  }
}

const Transition& FieldTransducer::transition(std::size_t state, const Fe& read) const {
  return states_[state].table[lookup_[state][read.value()]];
}

std::vector<Fe> FieldTransducer::run(const Fe& input) const {
  std::vector<Fe> cells(cell_count(), field_.zero());
  Fe reg = input;
  std::optional<std::size_t> state = start_;
  for (std::size_t step = 0; step < max_steps_ && state; ++step) {
    const Transition& t = transition(*state, reg);
    reg = field_(t.write);
    if (const auto& w = states_[*state].writes) cells[cell_offset(*w)] = reg;
    state = t.next;
  }
  if (state) {
    throw Error(Errc::RunTooLong, "machine still running after " + std::to_string(max_steps_) + " steps");
  }
  return cells;
}

MatrixTuple FieldTransducer::run_tuple(const Fe& input) const {
  const std::vector<Fe> cells = run(input);
  std::vector<Matrix> parts;
  for (std::size_t k = 0; k < components_; ++k) {
    std::vector<Fe> entries(cells.begin() + static_cast<std::ptrdiff_t>(k * n_ * n_),
                            cells.begin() + static_cast<std::ptrdiff_t>((k + 1) * n_ * n_));
    parts.emplace_back(n_, n_, field_, std::move(entries));
  }
  return MatrixTuple(std::move(parts));
}

MatrixTuple CompiledTransducer::assemble(const Fe& input) const {
  std::vector<Matrix> parts;
  for (std::size_t k = 0; k < components; ++k) {
    Matrix acc(n, n, field);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) acc += cell(k, i, j)(input) * Matrix::unit(n, i, j, field);
    }
    parts.push_back(std::move(acc));
  }
  return MatrixTuple(std::move(parts));
}

namespace {

template <class F>
Poly interpolate_table(PrimeField field, F&& value_at) {
  std::vector<std::pair<Fe, Fe>> nodes;
  for (std::uint32_t c = 0; c < field.modulus(); ++c) nodes.emplace_back(field(c), value_at(c));
  return interpolate(nodes);
}

struct Branch {
  std::size_t state;
  Poly reg;
  std::vector<Poly> cells;
  Poly guard;
};

}  // namespace

Poly transition_polynomial(const FieldTransducer& m, std::size_t state) {
  const PrimeField field = m.field();
  return interpolate_table(field, [&](std::uint32_t c) { return field(m.transition(state, field(c)).write); });
}

CompiledTransducer compile_transducer(const FieldTransducer& m) {
  const PrimeField field = m.field();
  const Poly zero(field);
  std::vector<Branch> active{
      {m.start(), Poly::x(field), std::vector<Poly>(m.cell_count(), zero), Poly::constant(field.one())}};
  std::vector<Branch> finished;

  for (std::size_t step = 0; step < m.max_steps() && !active.empty(); ++step) {
    std::vector<Branch> next_active;
    for (const Branch& b : active) {
      const TransducerState& st = m.states()[b.state];
      const Poly reg = reduce_as_function(compose(transition_polynomial(m, b.state), b.reg));
      std::vector<Poly> cells = b.cells;
      if (st.writes) cells[m.cell_offset(*st.writes)] = reg;

      // Successor chosen by the value read, which is b.reg (before the write).
      std::map<std::optional<std::size_t>, bool> targets;
      for (const Transition& t : st.table) targets[t.next] = true;
      for (const auto& [target, unused] : targets) {
        const Poly indicator = interpolate_table(field, [&](std::uint32_t c) {
          return m.transition(b.state, field(c)).next == target ? field.one() : field.zero();
        });
        Poly guard = reduce_as_function(b.guard * compose(indicator, b.reg));
        if (guard.is_zero()) continue;
        Branch child{target.value_or(0), reg, cells, std::move(guard)};
        (target ? next_active : finished).push_back(std::move(child));
      }
    }
    active = std::move(next_active);
  }
  if (!active.empty()) {
    throw Error(Errc::RunTooLong, "some input keeps the machine running past " +
                                      std::to_string(m.max_steps()) + " steps");
  }

  CompiledTransducer out{field, m.components(), m.size(), std::vector<Poly>(m.cell_count(), zero)};
  for (const Branch& b : finished) {
    for (std::size_t k = 0; k < out.cells.size(); ++k) {
      out.cells[k] += reduce_as_function(b.guard * b.cells[k]);
    }
  }
  return out;
}

}  // namespace tamewild
