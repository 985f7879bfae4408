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
#include <map>
#include <optional>
#include <string_view>
#include <utility>

#include "tamewild/matrix.hpp"
#include "tamewild/ncpoly.hpp"

namespace tamewild {

/// Commutative coefficient table c_{m,n} of p(lambda, mu) = f(lambda I, mu I)
/// for a two-variable non-commutative f.
class ScalarTable {
 public:
  using Exponents = std::pair<std::size_t, std::size_t>;

  explicit ScalarTable(PrimeField field) : field_(field) {}

  PrimeField field() const noexcept { return field_; }
  const std::map<Exponents, Fe>& coefficients() const noexcept { return coeffs_; }
  Fe coeff(std::size_t m, std::size_t n) const;
  void add(std::size_t m, std::size_t n, const Fe& c);

  /// Only a constant coefficient (or none at all).
  bool is_constant() const noexcept;
  Fe operator()(const Fe& lambda, const Fe& mu) const;

  friend bool operator==(const ScalarTable&, const ScalarTable&) = default;

 private:
  PrimeField field_;
  std::map<Exponents, Fe> coeffs_;
};

/// Collapses each word to lambda^m mu^n by letter counts.
ScalarTable scalar_specialize(const NcPoly& f);

struct ScalarCollision {
  std::pair<Fe, Fe> first;
  std::pair<Fe, Fe> second;
  Fe value;
};

/// Scans (lambda, mu) in lexicographic order and returns the first pair whose
/// value was already taken, together with the earlier pair. By pigeonhole a
/// collision always exists; TooLarge for p > 101.
std::optional<ScalarCollision> scalar_collision_search(const ScalarTable& table, std::uint32_t p);

/// Two tuples that are not simultaneously similar while their images are
/// similar (or the reverse), with the images.
struct ContainmentWitness {
  MatrixTuple left;
  MatrixTuple right;
  Matrix left_image;
  Matrix right_image;
  bool tuples_equivalent;
  bool images_similar;
};

enum class Outcome { FailsCondition1, FailsCondition2, DegenerateOnScalars, NotFalsified };
std::string_view outcome_name(Outcome o) noexcept;

struct Verdict {
  Outcome outcome = Outcome::NotFalsified;
  /// 1 for the scalar stage, 2 for the exhaustive stage, 0 if none fired.
  int stage = 0;
  bool degenerate_on_scalars = false;
  /// Set when the exhaustive stage was skipped because of the size guard.
  bool guard_limited = false;
  std::optional<ScalarCollision> collision;
  /// FailsCondition1: the input whose image left the target object set.
  std::optional<MatrixTuple> condition1_input;
  std::optional<ContainmentWitness> witness;
  std::uint64_t steps_used = 0;

  bool falsified() const noexcept { return outcome != Outcome::NotFalsified; }
};

/// Tries to refute that a (2 -> 1) transform contains simultaneous similarity
/// of n x n pairs in single-matrix similarity over F_p.
///
/// Scalar stage: a non-constant transform whose scalar table is non-constant
/// yields two distinct scalar pairs with equal value; distinct scalar pairs
/// are never simultaneously similar, yet their images coincide. A constant
/// transform is refuted the same way. A non-constant transform whose table
/// is constant (e.g. a commutator) is marked degenerate on scalars.
///
/// Exhaustive stage: compares the orbit partition of all pairs against
/// similarity of their images and reports the first disagreeing pair in
/// enumeration order. Skipped (guard_limited) past 10^5 pairs.
Verdict falsify_containment(const Transform& transform, std::size_t n, PrimeField field);

}  // namespace tamewild
