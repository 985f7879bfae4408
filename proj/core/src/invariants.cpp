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

#include "tamewild/invariants.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

namespace tamewild {
namespace {

void swap_rows(PolyMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(PolyMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// Minimal-degree nonzero entry of the trailing block starting at (k, k);
// row-major scan, so the first minimum wins ties.
std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const PolyMatrix& m, std::size_t k) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  int best_deg = 0;
  for (std::size_t i = k; i < m.rows(); ++i) {
    for (std::size_t j = k; j < m.cols(); ++j) {
      const Poly& e = m(i, j);
      if (e.is_zero()) continue;
      if (!best || e.degree() < best_deg) {
        best = {i, j};
        best_deg = e.degree();
      }
    }
  }
  return best;
}

// Clears column k below and row k right of the pivot by division. Returns
// false if some remainder survived, i.e. a smaller-degree entry appeared.
bool clear_cross(PolyMatrix& m, std::size_t k) {
  bool clean = true;
  const std::size_t n = m.rows();
  for (std::size_t i = k + 1; i < n; ++i) {
    if (m(i, k).is_zero()) continue;
    const Poly q = poly_divmod(m(i, k), m(k, k)).first;
    for (std::size_t j = k; j < n; ++j) m(i, j) -= q * m(k, j);
    if (!m(i, k).is_zero()) clean = false;
  }
  for (std::size_t j = k + 1; j < n; ++j) {
    if (m(k, j).is_zero()) continue;
    const Poly q = poly_divmod(m(k, j), m(k, k)).first;
    for (std::size_t i = k; i < n; ++i) m(i, j) -= q * m(i, k);
    if (!m(k, j).is_zero()) clean = false;
  }
  return clean;
}

}  // namespace

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, PrimeField field)
    : rows_(rows), cols_(cols), field_(field), entries_(rows * cols, Poly(field)) {}

InvariantFactors::InvariantFactors(std::vector<Poly> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error(Errc::InvalidChain, "empty invariant-factor chain");
  int total = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const Poly& f = factors_[k];
    if (f.field() != factors_.front().field()) {
      throw Error(Errc::InvalidChain, "factors over different fields");
    }
    if (!f.is_monic()) throw Error(Errc::InvalidChain, "factor " + to_string(f) + " is not monic");
    if (k > 0 && !poly_divmod(f, factors_[k - 1]).second.is_zero()) {
      throw Error(Errc::InvalidChain, to_string(factors_[k - 1]) + " does not divide " + to_string(f));
    }
    total += f.degree();
  }
  if (total != static_cast<int>(factors_.size())) {
    throw Error(Errc::InvalidChain, "total degree " + std::to_string(total) + " differs from length " +
                                        std::to_string(factors_.size()));
  }
}

std::vector<Poly> InvariantFactors::nontrivial() const {
  std::vector<Poly> out;
  for (const Poly& f : factors_) {
    if (!f.is_one()) out.push_back(f);
  }
  return out;
}

Poly InvariantFactors::product() const {
  Poly acc = Poly::constant(field().one());
  for (const Poly& f : factors_) acc *= f;
  return acc;
}

std::strong_ordering operator<=>(const InvariantFactors& a, const InvariantFactors& b) {
  if (auto c = a.factors_.size() <=> b.factors_.size(); c != 0) return c;
  for (std::size_t k = 0; k < a.factors_.size(); ++k) {
    if (auto c = a.factors_[k] <=> b.factors_[k]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const InvariantFactors& f) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (k) os << ", ";
    os << f.factors()[k];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const InvariantFactors& f) { return os << to_string(f); }

PolyMatrix char_matrix(const Matrix& a) {
  if (!a.is_square()) throw Error(Errc::NotSquare, "characteristic matrix needs a square matrix");
  const PrimeField field = a.field();
  const std::size_t n = a.rows();
  PolyMatrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = Poly::constant(-a(i, j));
      if (i == j) m(i, j) += Poly::x(field);
    }
  }
  return m;
}

InvariantFactors smith_normal_form(const PolyMatrix& input) {
  if (input.rows() != input.cols()) throw Error(Errc::NotSquare, "Smith form needs a square matrix");
  PolyMatrix m = input;
  const std::size_t n = m.rows();
  std::vector<Poly> diagonal;
  diagonal.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      const auto pivot = find_pivot(m, k);
      if (!pivot) throw Error(Errc::SingularPolyMatrix, "polynomial matrix has rank " + std::to_string(k));
      swap_rows(m, k, pivot->first);
      swap_cols(m, k, pivot->second);
      if (!clear_cross(m, k)) continue;

      // Divisibility: absorb a row whose entry the pivot does not divide.
      std::optional<std::size_t> offender;
      for (std::size_t i = k + 1; i < n && !offender; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          if (!poly_divmod(m(i, j), m(k, k)).second.is_zero()) {
            offender = i;
            break;
          }
        }
      }
      if (!offender) break;
      for (std::size_t j = k; j < n; ++j) m(k, j) += m(*offender, j);
    }
    diagonal.push_back(m(k, k).monic());
  }
  return InvariantFactors(std::move(diagonal));
}

InvariantFactors invariant_factors(const Matrix& a) { return smith_normal_form(char_matrix(a)); }

Poly char_poly(const Matrix& a) { return invariant_factors(a).product(); }

std::vector<Fe> spectrum_in_field(const Matrix& a) {
  Poly f = char_poly(a);
  const PrimeField field = a.field();
  std::vector<Fe> roots;
  for (std::uint32_t v = 0; v < field.modulus() && f.degree() > 0; ++v) {
    const Fe lambda = field(v);
    const Poly linear(field, {-lambda, field.one()});
    while (f.degree() > 0 && f(lambda).is_zero()) {
      f = poly_divmod(f, linear).first;
      roots.push_back(lambda);
    }
  }
  return roots;
}

Matrix companion(const Poly& f) {
  if (!f.is_monic() || f.degree() < 1) {
    throw Error(Errc::InvalidChain, "companion matrix needs a monic polynomial of degree >= 1");
  }
  const std::size_t d = static_cast<std::size_t>(f.degree());
  Matrix c(d, d, f.field());
  for (std::size_t i = 0; i + 1 < d; ++i) c(i + 1, i) = f.field().one();
  for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = -f.coeff(i);
  return c;
}

Matrix rational_canonical_form(const InvariantFactors& f) {
  const std::size_t n = f.size();
  Matrix out(n, n, f.field());
  std::size_t offset = 0;
  for (const Poly& factor : f.nontrivial()) {
    const Matrix block = companion(factor);
    for (std::size_t i = 0; i < block.rows(); ++i) {
      for (std::size_t j = 0; j < block.cols(); ++j) out(offset + i, offset + j) = block(i, j);
    }
    offset += block.rows();
  }
  return out;
}

}  // namespace tamewild
