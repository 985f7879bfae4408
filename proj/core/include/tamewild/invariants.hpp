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

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "tamewild/matrix.hpp"
#include "tamewild/poly.hpp"

namespace tamewild {

/// Row-major matrix with entries in F_p[x].
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, PrimeField field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  PrimeField field() const noexcept { return field_; }

  const Poly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Poly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  PrimeField field_;
  std::vector<Poly> entries_;
};

/// The invariant-factor chain (i_1, ..., i_n): monic, i_k | i_{k+1}, total
/// degree n. Unit factors are kept, so the length is always n and equality
/// is plain sequence equality.
class InvariantFactors {
 public:
  /// Throws InvalidChain unless the sequence is a valid chain.
  explicit InvariantFactors(std::vector<Poly> factors);

  const std::vector<Poly>& factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }
  PrimeField field() const noexcept { return factors_.front().field(); }
  /// The non-unit factors, in order.
  std::vector<Poly> nontrivial() const;
  Poly product() const;

  friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;
  friend std::strong_ordering operator<=>(const InvariantFactors& a, const InvariantFactors& b);

 private:
  std::vector<Poly> factors_;
};

/// "(1, x^2+x+1)".
std::string to_string(const InvariantFactors& f);
std::ostream& operator<<(std::ostream& os, const InvariantFactors& f);

/// xI - A.
PolyMatrix char_matrix(const Matrix& a);

/// Monic Smith diagonal of a square polynomial matrix that is nonsingular
/// over F_p[x].
InvariantFactors smith_normal_form(const PolyMatrix& m);

/// The full similarity invariant of a square matrix.
InvariantFactors invariant_factors(const Matrix& a);

/// det(xI - A), monic of degree n.
Poly char_poly(const Matrix& a);

/// Roots of the characteristic polynomial lying in F_p, with multiplicity,
/// ascending. Only a partial invariant: roots outside F_p are not seen.
std::vector<Fe> spectrum_in_field(const Matrix& a);

/// Companion matrix of a monic polynomial of degree >= 1: ones on the
/// subdiagonal, last column -c_0, ..., -c_{d-1}.
Matrix companion(const Poly& f);

/// Block-diagonal matrix of companion blocks of the non-unit factors.
Matrix rational_canonical_form(const InvariantFactors& f);

}  // namespace tamewild
