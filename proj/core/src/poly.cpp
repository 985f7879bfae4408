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

#include "tamewild/poly.hpp"

#include <algorithm>
#include <sstream>

namespace tamewild {

Poly::Poly(PrimeField field, std::vector<Fe> coefficients)
    : field_(field), coeffs_(std::move(coefficients)) {
  for (const Fe& c : coeffs_) {
    if (c.modulus() != field_.modulus()) {
      throw Error(Errc::ModulusMismatch, "polynomial coefficient outside F_" +
                                             std::to_string(field_.modulus()));
    }
  }
  trim();
}

Poly Poly::from_ints(PrimeField field, std::initializer_list<std::int64_t> lowest_first) {
  std::vector<Fe> coeffs;
  coeffs.reserve(lowest_first.size());
  for (std::int64_t v : lowest_first) coeffs.push_back(field(v));
  return Poly(field, std::move(coeffs));
}

Poly Poly::constant(const Fe& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const Fe& c, std::size_t degree) {
  std::vector<Fe> coeffs(degree + 1, c.field().zero());
  coeffs[degree] = c;
  return Poly(c.field(), std::move(coeffs));
}

void Poly::trim() noexcept {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Poly::require_same_field(const Poly& rhs) const {
  if (field_ != rhs.field_) {
    throw Error(Errc::ModulusMismatch, "F_" + std::to_string(field_.modulus()) + "[x] vs F_" +
                                           std::to_string(rhs.field_.modulus()) + "[x]");
  }
}

Fe Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }

Fe Poly::leading() const { return coeffs_.empty() ? field_.zero() : coeffs_.back(); }

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return *this * leading().inverse();
}

Fe Poly::operator()(const Fe& a) const {
  if (a.modulus() != field_.modulus()) {
    throw Error(Errc::ModulusMismatch, "evaluation point outside F_" +
                                           std::to_string(field_.modulus()));
  }
  Fe acc = field_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= a;
    acc += *it;
  }
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Fe& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  require_same_field(rhs);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  require_same_field(rhs);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  require_same_field(rhs);
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Fe> out(coeffs_.size() + rhs.coeffs_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Fe& scalar) {
  for (Fe& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (auto c = a.field_.modulus() <=> b.field_.modulus(); c != 0) return c;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
    if (auto c = a.coeffs_[i].value() <=> b.coeffs_[i].value(); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den) {
  if (num.field() != den.field()) {
    throw Error(Errc::ModulusMismatch, "poly_divmod operands over different fields");
  }
  if (den.is_zero()) throw Error(Errc::DivisionByZeroPoly, "division by the zero polynomial");
  const PrimeField field = num.field();
  if (num.degree() < den.degree()) return {Poly(field), num};

  std::vector<Fe> rem = num.coefficients();
  const auto& d = den.coefficients();
  const std::size_t dn = d.size();
  const Fe lead_inv = d.back().inverse();
  std::vector<Fe> quot(rem.size() - dn + 1, field.zero());
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Fe q = rem[k + dn - 1] * lead_inv;
    quot[k] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= q * d[j];
  }
  rem.resize(dn - 1, field.zero());
  return {Poly(field, std::move(quot)), Poly(field, std::move(rem))};
}

Poly poly_gcd_monic(const Poly& f, const Poly& g) {
  if (f.field() != g.field()) {
    throw Error(Errc::ModulusMismatch, "poly_gcd_monic operands over different fields");
  }
  if (f.is_zero() && g.is_zero()) throw Error(Errc::BothZero, "gcd(0, 0) is undefined");
  Poly a = f;
  Poly b = g;
  while (!b.is_zero()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Fe poly_eval(const Poly& f, const Fe& a) { return f(a); }

Poly interpolate(std::span<const std::pair<Fe, Fe>> nodes) {
  if (nodes.empty()) throw Error(Errc::EmptyTable, "interpolation needs at least one node");
  const PrimeField field = nodes.front().first.field();
  const std::size_t m = nodes.size();
  std::vector<Fe> xs, dd;
  xs.reserve(m);
  dd.reserve(m);
  for (const auto& [x, y] : nodes) {
    if (x.modulus() != field.modulus() || y.modulus() != field.modulus()) {
      throw Error(Errc::ModulusMismatch, "interpolation nodes over different fields");
    }
    if (std::find(xs.begin(), xs.end(), x) != xs.end()) {
      throw Error(Errc::DuplicateNode, "abscissa " + std::to_string(x.value()) + " repeated");
    }
    xs.push_back(x);
    dd.push_back(y);
  }
  // In place: dd[k] becomes f[x_0, ..., x_k].
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t k = m - 1; k >= level; --k) {
      dd[k] = (dd[k] - dd[k - 1]) / (xs[k] - xs[k - level]);
    }
  }
  // Nested Newton form.
  Poly result = Poly::constant(dd[m - 1]);
  for (std::size_t k = m - 1; k-- > 0;) {
    result *= Poly(field, {-xs[k], field.one()});
    result += Poly::constant(dd[k]);
  }
  return result;
}

Poly compose(const Poly& outer, const Poly& inner) {
  if (outer.field() != inner.field()) {
    throw Error(Errc::ModulusMismatch, "compose operands over different fields");
  }
  Poly acc(outer.field());
  const auto& c = outer.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= inner;
    acc += Poly::constant(*it);
  }
  return acc;
}

Poly reduce_as_function(const Poly& f) {
  const std::uint32_t p = f.field().modulus();
  if (f.degree() < static_cast<int>(p)) return f;
  // x^k with k >= p folds onto x^(k - (p - 1)).
  std::vector<Fe> out(p, f.field().zero());
  const auto& c = f.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    std::size_t e = k;
    if (e >= p) e = (e - 1) % (p - 1) + 1;
    out[e] += c[k];
  }
  return Poly(f.field(), std::move(out));
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = f.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    if (!first) os << '+';
    first = false;
    if (k == 0) {
      os << c[k].value();
      continue;
    }
    if (!c[k].is_one()) os << c[k].value() << '*';
    os << 'x';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << to_string(f); }

}  // namespace tamewild
