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
#include <ostream>

#include "tamewild/error.hpp"

namespace tamewild {

class Fe;

/// The prime field F_p. Construction validates primality by trial division,
/// so every nonzero element of a field obtained this way is invertible.
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxModulus = 1u << 31;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  /// Reduces any integer (negative included) into [0, p).
  Fe operator()(std::int64_t value) const;
  Fe zero() const;
  Fe one() const;

  friend bool operator==(PrimeField, PrimeField) = default;

 private:
  friend class Fe;
  struct Trusted {};
  constexpr PrimeField(Trusted, std::uint32_t p) noexcept : p_(p) {}

  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// A residue modulo p. Always reduced; carries its modulus so that mixing
/// elements of different fields is caught at the operation.
class Fe {
 public:
  Fe(std::int64_t value, PrimeField field);

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  PrimeField field() const noexcept { return PrimeField(PrimeField::Trusted{}, modulus_); }
  bool is_zero() const noexcept { return value_ == 0; }
  bool is_one() const noexcept { return value_ == 1; }

  Fe inverse() const;
  Fe pow(std::uint64_t exponent) const;

  Fe operator-() const noexcept;
  Fe& operator+=(const Fe& rhs);
  Fe& operator-=(const Fe& rhs);
  Fe& operator*=(const Fe& rhs);
  Fe& operator/=(const Fe& rhs);

  friend Fe operator+(Fe lhs, const Fe& rhs) { return lhs += rhs; }
  friend Fe operator-(Fe lhs, const Fe& rhs) { return lhs -= rhs; }
  friend Fe operator*(Fe lhs, const Fe& rhs) { return lhs *= rhs; }
  friend Fe operator/(Fe lhs, const Fe& rhs) { return lhs /= rhs; }

  // Ordering is by (modulus, value); used for canonical sorting only.
  friend auto operator<=>(const Fe&, const Fe&) = default;

 private:
  friend class PrimeField;
  struct Unchecked {};
  Fe(Unchecked, std::uint32_t value, std::uint32_t modulus) noexcept
      : modulus_(modulus), value_(value) {}

  void require_same_field(const Fe& rhs) const;

  std::uint32_t modulus_;
  std::uint32_t value_;
};

/// field_inverse: b with a*b = 1; throws ZeroInverse for a = 0.
inline Fe field_inverse(const Fe& a) { return a.inverse(); }

std::ostream& operator<<(std::ostream& os, const Fe& a);

}  // namespace tamewild
