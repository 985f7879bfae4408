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
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tamewild/field.hpp"
#include "tamewild/matrix.hpp"
#include "tamewild/steps.hpp"

namespace tamewild {

/// A word over the variables x_1..x_a, stored as 0-based indices. The empty
/// word is the constant monomial.
using Word = std::vector<std::uint8_t>;

/// Shorter words first, then lexicographic.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Non-commutative polynomial in x_1..x_a over F_p. Zero coefficients are
/// never stored, so equality is map equality.
class NcPoly {
 public:
  using Terms = std::map<Word, Fe, ShortLex>;

  NcPoly(std::size_t arity, PrimeField field);

  static NcPoly constant(std::size_t arity, const Fe& c);
  /// x_{index+1}.
  static NcPoly variable(std::size_t arity, std::size_t index, PrimeField field);
  static NcPoly monomial(std::size_t arity, const Word& word, const Fe& c);

  std::size_t arity() const noexcept { return arity_; }
  PrimeField field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// True for the zero polynomial and for pure constants.
  bool is_constant() const noexcept;
  std::size_t max_word_length() const noexcept;
  Fe coeff(const Word& word) const;

  void add_term(const Word& word, const Fe& c);

  NcPoly& operator+=(const NcPoly& rhs);
  NcPoly& operator-=(const NcPoly& rhs);
  NcPoly& operator*=(const Fe& scalar);
  friend NcPoly operator+(NcPoly lhs, const NcPoly& rhs) { return lhs += rhs; }
  friend NcPoly operator-(NcPoly lhs, const NcPoly& rhs) { return lhs -= rhs; }
  friend NcPoly operator*(NcPoly lhs, const Fe& rhs) { return lhs *= rhs; }
  /// Concatenation product.
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);

  friend bool operator==(const NcPoly& a, const NcPoly& b) {
    return a.arity_ == b.arity_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  void require_compatible(const NcPoly& rhs) const;

  std::size_t arity_;
  PrimeField field_;
  Terms terms_;
};

/// "c*x1x2+c*x2x1", constants as "c*1", zero as "0".
std::string to_string(const NcPoly& f);
std::ostream& operator<<(std::ostream& os, const NcPoly& f);

/// A b-tuple of non-commutative polynomials in a variables, with an optional
/// per-application step budget.
class Transform {
 public:
  Transform(std::size_t arity_in, std::vector<NcPoly> polys,
            std::optional<std::uint64_t> step_budget = std::nullopt);

  static Transform identity(std::size_t arity, PrimeField field);

  std::size_t arity_in() const noexcept { return arity_in_; }
  std::size_t arity_out() const noexcept { return polys_.size(); }
  PrimeField field() const noexcept { return polys_.front().field(); }
  const std::vector<NcPoly>& polys() const noexcept { return polys_; }
  std::optional<std::uint64_t> step_budget() const noexcept { return step_budget_; }
  void set_step_budget(std::optional<std::uint64_t> budget) { step_budget_ = budget; }

 private:
  std::size_t arity_in_;
  std::vector<NcPoly> polys_;
  std::optional<std::uint64_t> step_budget_;
};

/// Sum over terms of coefficient times the left-to-right product of the
/// word's matrices; the empty word contributes c I. Charges n^3 per matrix
/// product and n^2 per scaled accumulation (n for a constant term).
Matrix nc_eval(const NcPoly& f, const MatrixTuple& t, StepCounter& steps);
Matrix nc_eval(const NcPoly& f, const MatrixTuple& t);

struct TransformResult {
  MatrixTuple output;
  std::uint64_t steps;
};

/// Componentwise nc_eval under the transform's budget.
TransformResult apply_transform(const Transform& transform, const MatrixTuple& input);

}  // namespace tamewild
