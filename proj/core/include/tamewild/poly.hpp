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
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tamewild/field.hpp"

namespace tamewild {

/// Dense univariate polynomial over F_p, lowest degree first. The stored
/// coefficient vector never has a trailing zero; the zero polynomial is
/// empty and has degree -1.
class Poly {
 public:
  explicit Poly(PrimeField field) : field_(field) {}
  Poly(PrimeField field, std::vector<Fe> coefficients);

  static Poly from_ints(PrimeField field, std::initializer_list<std::int64_t> lowest_first);
  static Poly constant(const Fe& c);
  static Poly monomial(const Fe& c, std::size_t degree);
  static Poly x(PrimeField field) { return monomial(field.one(), 1); }

  PrimeField field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back().is_one(); }
  const std::vector<Fe>& coefficients() const noexcept { return coeffs_; }

  /// Coefficient of x^i; zero past the degree.
  Fe coeff(std::size_t i) const;
  /// Leading coefficient; zero for the zero polynomial.
  Fe leading() const;
  Poly monic() const;

  Fe operator()(const Fe& a) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Fe& scalar);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
  friend Poly operator*(Poly lhs, const Fe& rhs) { return lhs *= rhs; }
  friend Poly operator*(const Fe& lhs, Poly rhs) { return rhs *= lhs; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }
  // Degree first, then coefficients from the top down.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

 private:
  void require_same_field(const Poly& rhs) const;
  void trim() noexcept;

  PrimeField field_;
  std::vector<Fe> coeffs_;
};

std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den);
Poly poly_gcd_monic(const Poly& f, const Poly& g);
Fe poly_eval(const Poly& f, const Fe& a);

/// Newton divided-difference interpolation; the result has degree below the
/// number of nodes and reproduces every ordinate exactly.
Poly interpolate(std::span<const std::pair<Fe, Fe>> nodes);

/// outer(inner(x)).
Poly compose(const Poly& outer, const Poly& inner);

/// Remainder modulo x^p - x: the unique polynomial of degree < p inducing the
/// same function F_p -> F_p.
Poly reduce_as_function(const Poly& f);

/// Textual form such as "x^2+x+1" or "3*x^4+2"; the zero polynomial prints "0".
std::string to_string(const Poly& f);
std::ostream& operator<<(std::ostream& os, const Poly& f);

}  // namespace tamewild
