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

#include "tamewild/ncpoly.hpp"

#include <algorithm>
#include <sstream>

namespace tamewild {

NcPoly::NcPoly(std::size_t arity, PrimeField field) : arity_(arity), field_(field) {
  if (arity == 0) throw Error(Errc::ArityMismatch, "a polynomial needs at least one variable");
  if (arity > 255) throw Error(Errc::ArityMismatch, "at most 255 variables are supported");
}

NcPoly NcPoly::constant(std::size_t arity, const Fe& c) {
  NcPoly f(arity, c.field());
  f.add_term({}, c);
  return f;
}

NcPoly NcPoly::variable(std::size_t arity, std::size_t index, PrimeField field) {
  NcPoly f(arity, field);
  f.add_term({static_cast<std::uint8_t>(index)}, field.one());
  return f;
}

NcPoly NcPoly::monomial(std::size_t arity, const Word& word, const Fe& c) {
  NcPoly f(arity, c.field());
  f.add_term(word, c);
  return f;
}

bool NcPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::size_t NcPoly::max_word_length() const noexcept {
  return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

Fe NcPoly::coeff(const Word& word) const {
  const auto it = terms_.find(word);
  return it == terms_.end() ? field_.zero() : it->second;
}

void NcPoly::add_term(const Word& word, const Fe& c) {
  if (c.modulus() != field_.modulus()) {
    throw Error(Errc::ModulusMismatch, "coefficient outside F_" + std::to_string(field_.modulus()));
  }
  for (std::uint8_t v : word) {
    if (v >= arity_) {
      throw Error(Errc::ArityMismatch, "variable x" + std::to_string(v + 1) + " exceeds arity " +
                                           std::to_string(arity_));
    }
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(word, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void NcPoly::require_compatible(const NcPoly& rhs) const {
  if (arity_ != rhs.arity_) throw Error(Errc::ArityMismatch, "polynomials of different arity");
  if (field_ != rhs.field_) throw Error(Errc::ModulusMismatch, "polynomials over different fields");
}

NcPoly& NcPoly::operator+=(const NcPoly& rhs) {
  if (this == &rhs) return *this *= field_(2);
  require_compatible(rhs);
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& rhs) {
  if (this == &rhs) {
    terms_.clear();
    return *this;
  }
  require_compatible(rhs);
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Fe& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  a.require_compatible(b);
  NcPoly out(a.arity_, a.field_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

std::string to_string(const NcPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : f.terms()) {
    if (!first) os << '+';
    first = false;
    os << c.value() << '*';
    if (w.empty()) os << '1';
    for (std::uint8_t v : w) os << 'x' << (v + 1);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const NcPoly& f) { return os << to_string(f); }

Transform::Transform(std::size_t arity_in, std::vector<NcPoly> polys,
                     std::optional<std::uint64_t> step_budget)
    : arity_in_(arity_in), polys_(std::move(polys)), step_budget_(step_budget) {
  if (arity_in_ == 0 || polys_.empty()) {
    throw Error(Errc::ArityMismatch, "a transform needs a >= 1 inputs and b >= 1 outputs");
  }
  for (const NcPoly& f : polys_) {
    if (f.arity() != arity_in_) throw Error(Errc::ArityMismatch, "polynomial arity differs from transform");
    if (f.field() != polys_.front().field()) {
      throw Error(Errc::ModulusMismatch, "transform polynomials over different fields");
    }
  }
}

Transform Transform::identity(std::size_t arity, PrimeField field) {
  std::vector<NcPoly> polys;
  for (std::size_t k = 0; k < arity; ++k) polys.push_back(NcPoly::variable(arity, k, field));
  return Transform(arity, std::move(polys));
}

Matrix nc_eval(const NcPoly& f, const MatrixTuple& t, StepCounter& steps) {
  if (t.arity() != f.arity()) {
    throw Error(Errc::ArityMismatch, "polynomial in " + std::to_string(f.arity()) +
                                         " variables applied to a " + std::to_string(t.arity()) +
                                         "-tuple");
  }
  if (t.field() != f.field()) throw Error(Errc::ModulusMismatch, "tuple and polynomial over different fields");
  const std::size_t n = t.size();
  const std::uint64_t n2 = n * n;
  Matrix acc(n, n, f.field());
  for (const auto& [word, c] : f.terms()) {
    if (word.empty()) {
      steps.charge(n);
      for (std::size_t i = 0; i < n; ++i) acc(i, i) += c;
      continue;
    }
    Matrix prod = t[word.front()];
    for (std::size_t k = 1; k < word.size(); ++k) {
      steps.charge(n2 * n);
      prod = prod * t[word[k]];
    }
    steps.charge(n2);
    acc += c * prod;
  }
  return acc;
}

Matrix nc_eval(const NcPoly& f, const MatrixTuple& t) {
  StepCounter unbounded;
  return nc_eval(f, t, unbounded);
}

TransformResult apply_transform(const Transform& transform, const MatrixTuple& input) {
  if (input.arity() != transform.arity_in()) {
    throw Error(Errc::ArityMismatch, "transform expects a " + std::to_string(transform.arity_in()) +
                                         "-tuple, got " + std::to_string(input.arity()));
  }
  StepCounter steps(transform.step_budget());
  std::vector<Matrix> out;
  out.reserve(transform.arity_out());
  for (const NcPoly& f : transform.polys()) out.push_back(nc_eval(f, input, steps));
  return {MatrixTuple(std::move(out)), steps.used()};
}

}  // namespace tamewild
