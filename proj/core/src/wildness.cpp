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

#include "tamewild/wildness.hpp"

#include <vector>

#include "tamewild/equivalence.hpp"
#include "tamewild/invariants.hpp"

namespace tamewild {

Fe ScalarTable::coeff(std::size_t m, std::size_t n) const {
  const auto it = coeffs_.find({m, n});
  return it == coeffs_.end() ? field_.zero() : it->second;
}

void ScalarTable::add(std::size_t m, std::size_t n, const Fe& c) {
  if (c.modulus() != field_.modulus()) throw Error(Errc::ModulusMismatch, "coefficient outside the table's field");
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace({m, n}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

bool ScalarTable::is_constant() const noexcept {
  return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == Exponents{0, 0});
}

Fe ScalarTable::operator()(const Fe& lambda, const Fe& mu) const {
  Fe acc = field_.zero();
  for (const auto& [e, c] : coeffs_) acc += c * lambda.pow(e.first) * mu.pow(e.second);
  return acc;
}

ScalarTable scalar_specialize(const NcPoly& f) {
  if (f.arity() != 2) {
    throw Error(Errc::ArityMismatch, "scalar specialization needs a polynomial in two variables");
  }
  ScalarTable table(f.field());
  for (const auto& [word, c] : f.terms()) {
    std::size_t m = 0, n = 0;
    for (std::uint8_t v : word) (v == 0 ? m : n) += 1;
    table.add(m, n, c);
  }
  return table;
}

std::optional<ScalarCollision> scalar_collision_search(const ScalarTable& table, std::uint32_t p) {
  if (p > 101) throw Error(Errc::TooLarge, "scalar collision scan is limited to p <= 101");
  if (p != table.field().modulus()) throw Error(Errc::ModulusMismatch, "table is not over F_" + std::to_string(p));
  const PrimeField field = table.field();
  // first_seen[v] is the earliest pair index with value v.
  std::vector<std::optional<std::uint32_t>> first_seen(p);
  for (std::uint32_t idx = 0; idx < p * p; ++idx) {
    const Fe lambda = field(idx / p);
    const Fe mu = field(idx % p);
    const Fe v = table(lambda, mu);
    auto& slot = first_seen[v.value()];
    if (slot) {
      return ScalarCollision{{field(*slot / p), field(*slot % p)}, {lambda, mu}, v};
    }
    slot = idx;
  }
  return std::nullopt;
}

std::string_view outcome_name(Outcome o) noexcept {
  switch (o) {
    case Outcome::FailsCondition1: return "FailsCondition1";
    case Outcome::FailsCondition2: return "FailsCondition2";
    case Outcome::DegenerateOnScalars: return "DegenerateOnScalars";
    case Outcome::NotFalsified: return "NotFalsified";
  }
  return "Unknown";
}

namespace {

bool lands_in_targets(const Matrix& image, std::size_t n) {
  return image.is_square() && image.rows() == n;
}

Verdict exhaustive_stage(const NcPoly& f, std::optional<std::uint64_t> budget, std::size_t n,
                         PrimeField field, Verdict verdict) {
  std::uint64_t total = 0;
  try {
    total = checked_power(field.modulus(), 2 * n * n, kMaxObjects);
  } catch (const Error& e) {
    if (e.code() != Errc::TooLarge) throw;
    verdict.guard_limited = true;
    return verdict;
  }
  const OrbitTable orbits = conjugation_orbits(n, field, 2);

  std::vector<Matrix> images;
  std::vector<std::size_t> image_class(total);
  std::map<InvariantFactors, std::size_t> classes;
  images.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const MatrixTuple t = tuple_at_index(2, n, field, idx);
    StepCounter steps(budget);
    Matrix image = nc_eval(f, t, steps);
    verdict.steps_used += steps.used();
    if (!lands_in_targets(image, n)) {
      verdict.outcome = Outcome::FailsCondition1;
      verdict.stage = 2;
      verdict.condition1_input = t;
      return verdict;
    }
    const auto [it, inserted] = classes.try_emplace(invariant_factors(image), classes.size());
    image_class[idx] = it->second;
    images.push_back(std::move(image));
  }

  for (std::uint64_t i = 0; i < total; ++i) {
    for (std::uint64_t j = i + 1; j < total; ++j) {
      const bool equivalent = orbits.class_of[i] == orbits.class_of[j];
      const bool similar_images = image_class[i] == image_class[j];
      if (equivalent == similar_images) continue;
      verdict.outcome = verdict.degenerate_on_scalars ? Outcome::DegenerateOnScalars
                                                      : Outcome::FailsCondition2;
      verdict.stage = 2;
      verdict.witness = ContainmentWitness{tuple_at_index(2, n, field, i),
                                           tuple_at_index(2, n, field, j),
                                           images[i],
                                           images[j],
                                           equivalent,
                                           similar_images};
      return verdict;
    }
  }
  return verdict;
}

}  // namespace

Verdict falsify_containment(const Transform& transform, std::size_t n, PrimeField field) {
  if (transform.arity_in() != 2 || transform.arity_out() != 1) {
    throw Error(Errc::ArityMismatch, "containment of pairs in single matrices needs a (2 -> 1) transform");
  }
  if (transform.field() != field) {
    throw Error(Errc::ModulusMismatch, "transform is not over F_" + std::to_string(field.modulus()));
  }
  if (n == 0) throw Error(Errc::ShapeMismatch, "matrix size must be >= 1");
  const NcPoly& f = transform.polys().front();

  Verdict verdict;
  const ScalarTable table = scalar_specialize(f);
  if (table.is_constant() && !f.is_constant()) {
    verdict.degenerate_on_scalars = true;
    return exhaustive_stage(f, transform.step_budget(), n, field, std::move(verdict));
  }

  const auto collision = scalar_collision_search(table, field.modulus());
  if (!collision) {
    // Unreachable for p >= 2 by pigeonhole; fall through to the scan.
    return exhaustive_stage(f, transform.step_budget(), n, field, std::move(verdict));
  }
  verdict.collision = collision;
  const MatrixTuple left{Matrix::scalar(n, collision->first.first), Matrix::scalar(n, collision->first.second)};
  const MatrixTuple right{Matrix::scalar(n, collision->second.first), Matrix::scalar(n, collision->second.second)};
  StepCounter steps(transform.step_budget());
  Matrix left_image = nc_eval(f, left, steps);
  Matrix right_image = nc_eval(f, right, steps);
  verdict.steps_used = steps.used();
  const bool images_similar = similar(left_image, right_image);
  verdict.outcome = Outcome::FailsCondition2;
  verdict.stage = 1;
  verdict.witness = ContainmentWitness{left, right, std::move(left_image), std::move(right_image),
                                       false, images_similar};
  return verdict;
}

}  // namespace tamewild
