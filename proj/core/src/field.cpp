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

#include "tamewild/field.hpp"

#include <string>

namespace tamewild {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p > kMaxModulus || !is_prime(p)) {
    throw Error(Errc::NotPrime, "modulus " + std::to_string(p) + " is not a prime <= 2^31");
  }
}

Fe PrimeField::operator()(std::int64_t value) const { return Fe(value, *this); }
Fe PrimeField::zero() const { return Fe(Fe::Unchecked{}, 0, p_); }
Fe PrimeField::one() const { return Fe(Fe::Unchecked{}, 1, p_); }

Fe::Fe(std::int64_t value, PrimeField field) : modulus_(field.modulus()), value_(0) {
  const auto p = static_cast<std::int64_t>(modulus_);
  std::int64_t r = value % p;
  if (r < 0) r += p;
  value_ = static_cast<std::uint32_t>(r);
}

void Fe::require_same_field(const Fe& rhs) const {
  if (modulus_ != rhs.modulus_) {
    throw Error(Errc::ModulusMismatch, "F_" + std::to_string(modulus_) + " vs F_" +
                                           std::to_string(rhs.modulus_));
  }
}

Fe Fe::operator-() const noexcept {
  return Fe(Unchecked{}, value_ == 0 ? 0 : modulus_ - value_, modulus_);
}

Fe& Fe::operator+=(const Fe& rhs) {
  require_same_field(rhs);
  const std::uint64_t s = std::uint64_t{value_} + rhs.value_;
  value_ = static_cast<std::uint32_t>(s >= modulus_ ? s - modulus_ : s);
  return *this;
}

Fe& Fe::operator-=(const Fe& rhs) {
  require_same_field(rhs);
  value_ = value_ >= rhs.value_ ? value_ - rhs.value_ : value_ + (modulus_ - rhs.value_);
  return *this;
}

Fe& Fe::operator*=(const Fe& rhs) {
  require_same_field(rhs);
  value_ = static_cast<std::uint32_t>((std::uint64_t{value_} * rhs.value_) % modulus_);
  return *this;
}

Fe& Fe::operator/=(const Fe& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

Fe Fe::pow(std::uint64_t exponent) const {
  Fe result(Unchecked{}, 1 % modulus_, modulus_);
  Fe base = *this;
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

Fe Fe::inverse() const {
  if (value_ == 0) {
    throw Error(Errc::ZeroInverse, "0 has no inverse in F_" + std::to_string(modulus_));
  }
  // Extended Euclid on (value, p).
  std::int64_t r0 = modulus_, r1 = value_;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  return Fe(t0, field());
}

std::ostream& operator<<(std::ostream& os, const Fe& a) { return os << a.value(); }

}  // namespace tamewild
