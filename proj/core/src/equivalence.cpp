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

#include "tamewild/equivalence.hpp"

#include <deque>

namespace tamewild {
namespace {

void require_same_square(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square()) throw Error(Errc::NotSquare, "similarity needs square matrices");
  if (a.rows() != b.rows()) throw Error(Errc::ShapeMismatch, "matrices of different sizes");
  if (a.field() != b.field()) throw Error(Errc::ModulusMismatch, "matrices over different fields");
}

void require_same_tuple_shape(const MatrixTuple& t, const MatrixTuple& u) {
  if (t.arity() != u.arity()) throw Error(Errc::ShapeMismatch, "tuples of different lengths");
  if (t.size() != u.size()) throw Error(Errc::ShapeMismatch, "tuples of different matrix sizes");
  if (t.field() != u.field()) throw Error(Errc::ModulusMismatch, "tuples over different fields");
}

// S A S^-1 = B  <=>  S A = B S for invertible S.
bool conjugates(const Matrix& s, const MatrixTuple& t, const MatrixTuple& u) {
  for (std::size_t k = 0; k < t.arity(); ++k) {
    if (s * t[k] != u[k] * s) return false;
  }
  return true;
}

}  // namespace

bool similar(const Matrix& a, const Matrix& b) {
  require_same_square(a, b);
  return invariant_factors(a) == invariant_factors(b);
}

std::optional<Matrix> similar_bruteforce(const Matrix& a, const Matrix& b) {
  require_same_square(a, b);
  return sim_similar(MatrixTuple{a}, MatrixTuple{b});
}

std::optional<Matrix> similar_bruteforce(const Matrix& a, const Matrix& b,
                                         std::span<const GroupElement> group) {
  require_same_square(a, b);
  return sim_similar(MatrixTuple{a}, MatrixTuple{b}, group);
}

std::optional<Matrix> sim_similar(const MatrixTuple& t, const MatrixTuple& u) {
  require_same_tuple_shape(t, u);
  for (const Matrix& s : enumerate_gl(t.size(), t.field())) {
    if (conjugates(s, t, u)) return s;
  }
  return std::nullopt;
}

std::optional<Matrix> sim_similar(const MatrixTuple& t, const MatrixTuple& u,
                                  std::span<const GroupElement> group) {
  require_same_tuple_shape(t, u);
  for (const GroupElement& g : group) {
    if (g.s.rows() != t.size() || g.s.field() != t.field()) {
      throw Error(Errc::ShapeMismatch, "group does not act on these tuples");
    }
    if (conjugates(g.s, t, u)) return g.s;
  }
  return std::nullopt;
}

std::shared_ptr<const EquivProblem<Matrix>> similarity_problem(std::size_t n, PrimeField field) {
  auto group = std::make_shared<const std::vector<GroupElement>>(general_linear_group(n, field));
  auto problem = std::make_shared<EquivProblem<Matrix>>();
  problem->name = "similarity(n=" + std::to_string(n) + ",p=" + std::to_string(field.modulus()) + ")";
  const std::uint64_t total = checked_power(field.modulus(), n * n, kMaxObjects);
  problem->objects.reserve(total);
  for (const Matrix& m : enumerate_matrices(n, n, field)) problem->objects.push_back(m);
  problem->decide = [group](const Matrix& a, const Matrix& b) {
    return similar_bruteforce(a, b, *group).has_value();
  };
  return problem;
}

std::shared_ptr<const EquivProblem<MatrixTuple>> simultaneous_similarity_problem(
    std::size_t n, PrimeField field, std::size_t arity) {
  auto group = std::make_shared<const std::vector<GroupElement>>(general_linear_group(n, field));
  auto problem = std::make_shared<EquivProblem<MatrixTuple>>();
  problem->name = "simultaneous_similarity(n=" + std::to_string(n) + ",p=" +
                  std::to_string(field.modulus()) + ",a=" + std::to_string(arity) + ")";
  const std::uint64_t total = checked_power(field.modulus(), n * n * arity, kMaxObjects);
  problem->objects.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    problem->objects.push_back(tuple_at_index(arity, n, field, idx));
  }
  problem->decide = [group](const MatrixTuple& t, const MatrixTuple& u) {
    return sim_similar(t, u, *group).has_value();
  };
  return problem;
}

OrbitTable conjugation_orbits(std::size_t n, PrimeField field, std::size_t arity) {
  const std::uint64_t total = checked_power(field.modulus(), n * n * arity, kMaxObjects);
  const auto group = general_linear_group(n, field);
  OrbitTable table;
  table.problem = arity == 1 ? "similarity(n=" + std::to_string(n) + ",p=" +
                                   std::to_string(field.modulus()) + ")"
                             : "simultaneous_similarity(n=" + std::to_string(n) + ",p=" +
                                   std::to_string(field.modulus()) + ",a=" + std::to_string(arity) + ")";
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  table.class_of.assign(total, kUnassigned);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (table.class_of[idx] != kUnassigned) continue;
    const std::size_t c = table.classes.size();
    const MatrixTuple t = tuple_at_index(arity, n, field, idx);
    std::vector<std::size_t> members;
    for (const GroupElement& g : group) {
      std::vector<Matrix> parts;
      parts.reserve(arity);
      for (const Matrix& a : t.parts()) parts.push_back(g.s * a * g.s_inverse);
      const std::uint64_t j = tuple_index(MatrixTuple(std::move(parts)));
      if (table.class_of[j] == kUnassigned) {
        table.class_of[j] = c;
        members.push_back(static_cast<std::size_t>(j));
      }
    }
    std::sort(members.begin(), members.end());
    table.classes.push_back(std::move(members));
    table.representatives.push_back(static_cast<std::size_t>(idx));
  }
  return table;
}

std::string_view kind_name(InvariantVerdict::Kind kind) noexcept {
  switch (kind) {
    case InvariantVerdict::Kind::NotInvariant: return "NotInvariant";
    case InvariantVerdict::Kind::Partial: return "Partial";
    case InvariantVerdict::Kind::Full: return "Full";
  }
  return "Unknown";
}

ReductionWitness<Matrix, Matrix> transpose_reduction(
    std::shared_ptr<const EquivProblem<Matrix>> similarity, std::uint64_t step_budget) {
  return ReductionWitness<Matrix, Matrix>(
      "transpose", similarity, similarity,
      [](const Matrix& a, StepCounter& steps) {
        steps.charge(a.rows() * a.cols());
        return a.transpose();
      },
      step_budget);
}

ReductionWitness<Matrix, MatrixTuple> pair_embedding_reduction(
    std::shared_ptr<const EquivProblem<Matrix>> similarity,
    std::shared_ptr<const EquivProblem<MatrixTuple>> pairs, std::uint64_t step_budget) {
  return ReductionWitness<Matrix, MatrixTuple>(
      "A -> (A, I)", std::move(similarity), std::move(pairs),
      [](const Matrix& a, StepCounter& steps) {
        steps.charge(2 * a.rows() * a.cols());
        return MatrixTuple{a, Matrix::identity(a.rows(), a.field())};
      },
      step_budget);
}

bool ProblemRegistry::reduces_to(const std::string& from, const std::string& to) const {
  if (from == to) return true;
  std::set<std::string> seen{from};
  std::deque<std::string> queue{from};
  while (!queue.empty()) {
    const std::string cur = queue.front();
    queue.pop_front();
    const auto it = edges_.find(cur);
    if (it == edges_.end()) continue;
    for (const std::string& next : it->second) {
      if (next == to) return true;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return false;
}

bool ProblemRegistry::closed(const std::string& name) const {
  if (!problems_.contains(name)) return false;
  return std::all_of(problems_.begin(), problems_.end(),
                     [&](const std::string& other) { return reduces_to(other, name); });
}

}  // namespace tamewild
