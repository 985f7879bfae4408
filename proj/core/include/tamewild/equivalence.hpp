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

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tamewild/error.hpp"
#include "tamewild/invariants.hpp"
#include "tamewild/matrix.hpp"
#include "tamewild/steps.hpp"

namespace tamewild {

inline constexpr std::uint64_t kMaxObjects = 100'000;
inline constexpr std::uint64_t kMaxDecideCalls = 100'000'000;

// ---------------------------------------------------------------------------
// Matrix similarity deciders.

/// Similarity through the invariant-factor chain.
bool similar(const Matrix& a, const Matrix& b);

/// First S in GL enumeration order with S A S^-1 = B, if any.
std::optional<Matrix> similar_bruteforce(const Matrix& a, const Matrix& b);
std::optional<Matrix> similar_bruteforce(const Matrix& a, const Matrix& b,
                                         std::span<const GroupElement> group);

/// First S in GL enumeration order conjugating every part of t onto u.
std::optional<Matrix> sim_similar(const MatrixTuple& t, const MatrixTuple& u);
std::optional<Matrix> sim_similar(const MatrixTuple& t, const MatrixTuple& u,
                                  std::span<const GroupElement> group);

// ---------------------------------------------------------------------------
// Finite equivalence problems [C, ~].

template <class Object>
struct EquivProblem {
  std::string name;
  std::vector<Object> objects;
  std::function<bool(const Object&, const Object&)> decide;
};

/// M_n(F_p) under conjugation, decided by brute-force conjugator search.
/// Objects are in enumeration order.
std::shared_ptr<const EquivProblem<Matrix>> similarity_problem(std::size_t n, PrimeField field);

/// a-tuples over M_n(F_p) under simultaneous conjugation (brute force).
std::shared_ptr<const EquivProblem<MatrixTuple>> simultaneous_similarity_problem(
    std::size_t n, PrimeField field, std::size_t arity = 2);

struct OrbitTable {
  std::string problem;
  /// Each orbit lists object indices ascending; orbits are ordered by their
  /// representative.
  std::vector<std::vector<std::size_t>> classes;
  /// Minimum index of each orbit.
  std::vector<std::size_t> representatives;
  /// class_of[i] is the orbit holding object i.
  std::vector<std::size_t> class_of;

  std::size_t count() const noexcept { return classes.size(); }
};

/// Partition by comparing each object against the representatives found so
/// far. Assumes decide is an equivalence relation.
template <class Object>
OrbitTable orbit_table(const EquivProblem<Object>& problem) {
  const std::size_t n = problem.objects.size();
  if (n > kMaxObjects) {
    throw Error(Errc::TooLarge, problem.name + " has " + std::to_string(n) + " objects");
  }
  OrbitTable table;
  table.problem = problem.name;
  table.class_of.assign(n, 0);
  std::uint64_t calls = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < table.classes.size(); ++c) {
      if (++calls > kMaxDecideCalls) throw Error(Errc::TooLarge, "decide-call limit reached");
      if (problem.decide(problem.objects[table.representatives[c]], problem.objects[i])) {
        table.classes[c].push_back(i);
        table.class_of[i] = c;
        placed = true;
        break;
      }
    }
    if (!placed) {
      table.class_of[i] = table.classes.size();
      table.classes.push_back({i});
      table.representatives.push_back(i);
    }
  }
  return table;
}

/// Orbits of GL_n(F_p) acting by simultaneous conjugation on a-tuples,
/// computed by applying the group to each unvisited tuple. Object indices
/// are tuple_index values, matching simultaneous_similarity_problem (and
/// similarity_problem for arity 1).
OrbitTable conjugation_orbits(std::size_t n, PrimeField field, std::size_t arity);

struct RelationCheck {
  bool reflexive = true;
  bool symmetric = true;
  bool transitive = true;
  /// False when transitivity was only sampled.
  bool transitivity_exhaustive = true;

  bool holds() const noexcept { return reflexive && symmetric && transitive; }
};

/// Reflexivity and symmetry exhaustively; transitivity on every triple for
/// at most 100 objects, otherwise on `samples` random triples.
template <class Object>
RelationCheck check_equivalence_relation(const EquivProblem<Object>& problem,
                                         std::uint64_t seed = 1, std::size_t samples = 20'000) {
  const auto& obj = problem.objects;
  const std::size_t n = obj.size();
  if (n * n > kMaxDecideCalls) throw Error(Errc::TooLarge, problem.name + " is too large to check");
  RelationCheck check;
  std::vector<char> rel(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rel[i * n + j] = problem.decide(obj[i], obj[j]) ? 1 : 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!rel[i * n + i]) check.reflexive = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (rel[i * n + j] != rel[j * n + i]) check.symmetric = false;
    }
  }
  auto triple_ok = [&](std::size_t i, std::size_t j, std::size_t k) {
    return !(rel[i * n + j] && rel[j * n + k]) || rel[i * n + k];
  };
  if (n <= 100) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!triple_ok(i, j, k)) check.transitive = false;
  } else {
    check.transitivity_exhaustive = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < samples; ++s) {
      // Bias towards related pairs so the implication is actually exercised.
      const std::size_t i = pick(rng);
      std::size_t j = pick(rng);
      for (std::size_t t = 0; t < n && !rel[i * n + j]; ++t) j = (j + 1) % n;
      const std::size_t k = pick(rng);
      if (!triple_ok(i, j, k)) check.transitive = false;
    }
  }
  return check;
}

// ---------------------------------------------------------------------------
// Invariants.

template <class Object, class Value>
struct InvariantCandidate {
  std::string name;
  std::function<Value(const Object&)> map;
};

struct InvariantVerdict {
  enum class Kind { NotInvariant, Partial, Full };
  Kind kind = Kind::Full;
  /// NotInvariant: a ~ b with T a != T b. Partial: T a = T b with a !~ b.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

std::string_view kind_name(InvariantVerdict::Kind kind) noexcept;

template <class Object, class Value>
InvariantVerdict verify_invariant(const EquivProblem<Object>& problem,
                                  const InvariantCandidate<Object, Value>& candidate) {
  const auto& obj = problem.objects;
  const std::size_t n = obj.size();
  if (n > kMaxObjects || (n > 1 && n * (n - 1) / 2 > kMaxDecideCalls)) {
    throw Error(Errc::TooLarge, problem.name + " is too large for exhaustive pairing");
  }
  std::vector<Value> values;
  values.reserve(n);
  for (const Object& o : obj) values.push_back(candidate.map(o));

  InvariantVerdict verdict;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool same_value = values[i] == values[j];
      const bool equivalent = problem.decide(obj[i], obj[j]);
      if (equivalent && !same_value) {
        return {InvariantVerdict::Kind::NotInvariant, std::pair{i, j}};
      }
      if (!equivalent && same_value && verdict.kind == InvariantVerdict::Kind::Full) {
        verdict = {InvariantVerdict::Kind::Partial, std::pair{i, j}};
      }
    }
  }
  return verdict;
}

// ---------------------------------------------------------------------------
// Reductions.

template <class Source, class Target>
class ReductionWitness;

template <class Source, class Target>
bool verify_reduction(ReductionWitness<Source, Target>& w);

/// A many-to-one map between two problems, with a per-object step budget
/// modelling the resource class the map must be computable in.
template <class Source, class Target>
class ReductionWitness {
 public:
  using Map = std::function<Target(const Source&, StepCounter&)>;

  ReductionWitness(std::string name, std::shared_ptr<const EquivProblem<Source>> source,
                   std::shared_ptr<const EquivProblem<Target>> target, Map map,
                   std::uint64_t step_budget)
      : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)),
        map_(std::move(map)), step_budget_(step_budget) {}

  const std::string& name() const noexcept { return name_; }
  const EquivProblem<Source>& source() const { return *source_; }
  const EquivProblem<Target>& target() const { return *target_; }
  std::shared_ptr<const EquivProblem<Source>> source_ptr() const { return source_; }
  std::shared_ptr<const EquivProblem<Target>> target_ptr() const { return target_; }
  const Map& map() const noexcept { return map_; }
  std::uint64_t step_budget() const noexcept { return step_budget_; }

  /// Set only by a successful exhaustive bidirectional check.
  bool verified() const noexcept { return verified_; }
  std::uint64_t total_steps() const noexcept { return total_steps_; }
  std::uint64_t max_steps_per_object() const noexcept { return max_steps_; }
  /// Source index pair on which equivalence was not preserved or reflected.
  std::optional<std::pair<std::size_t, std::size_t>> counterexample() const { return counterexample_; }

 private:
  friend bool verify_reduction<Source, Target>(ReductionWitness& w);

  std::string name_;
  std::shared_ptr<const EquivProblem<Source>> source_;
  std::shared_ptr<const EquivProblem<Target>> target_;
  Map map_;
  std::uint64_t step_budget_;
  bool verified_ = false;
  std::uint64_t total_steps_ = 0;
  std::uint64_t max_steps_ = 0;
  std::optional<std::pair<std::size_t, std::size_t>> counterexample_;
};

/// Checks a ~ b <=> map(a) ~ map(b) over all source pairs. Each object's image
/// is computed once under its own budget; an overrun throws BudgetExceeded.
template <class Source, class Target>
bool verify_reduction(ReductionWitness<Source, Target>& w) {
  const auto& src = w.source();
  const auto& dst = w.target();
  const std::size_t n = src.objects.size();
  if (n > kMaxObjects || n * (n + 1) / 2 > kMaxDecideCalls) {
    throw Error(Errc::TooLarge, src.name + " is too large for exhaustive verification");
  }
  w.verified_ = false;
  w.total_steps_ = 0;
  w.max_steps_ = 0;
  w.counterexample_.reset();

  std::vector<Target> images;
  images.reserve(n);
  for (const Source& o : src.objects) {
    StepCounter counter(w.step_budget_);
    images.push_back(w.map_(o, counter));
    w.total_steps_ += counter.used();
    w.max_steps_ = std::max(w.max_steps_, counter.used());
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (src.decide(src.objects[i], src.objects[j]) != dst.decide(images[i], images[j])) {
        w.counterexample_ = std::pair{i, j};
        return false;
      }
    }
  }
  w.verified_ = true;
  return true;
}

/// second after first, with the budgets added. Not verified until checked.
template <class A, class B, class C>
ReductionWitness<A, C> compose(const ReductionWitness<A, B>& first,
                               const ReductionWitness<B, C>& second) {
  auto f = first.map();
  auto g = second.map();
  return ReductionWitness<A, C>(
      second.name() + " . " + first.name(), first.source_ptr(), second.target_ptr(),
      [f, g](const A& a, StepCounter& steps) { return g(f(a, steps), steps); },
      first.step_budget() + second.step_budget());
}

/// Identity reduction of a problem onto itself; charges nothing.
template <class Object>
ReductionWitness<Object, Object> identity_reduction(std::shared_ptr<const EquivProblem<Object>> p,
                                                    std::uint64_t step_budget = 0) {
  return ReductionWitness<Object, Object>(
      "identity", p, p, [](const Object& o, StepCounter&) { return o; }, step_budget);
}

/// A |-> A^T on single-matrix similarity; one step per entry written.
ReductionWitness<Matrix, Matrix> transpose_reduction(
    std::shared_ptr<const EquivProblem<Matrix>> similarity, std::uint64_t step_budget);

/// A |-> (A, I) from single-matrix similarity into pairs under simultaneous
/// similarity; one step per entry written.
ReductionWitness<Matrix, MatrixTuple> pair_embedding_reduction(
    std::shared_ptr<const EquivProblem<Matrix>> similarity,
    std::shared_ptr<const EquivProblem<MatrixTuple>> pairs, std::uint64_t step_budget);

/// Registered problems and the verified reductions between them. Closure is
/// relative to this registry: a problem is closed when every other
/// registered problem reduces to it through recorded verified reductions.
class ProblemRegistry {
 public:
  void add(const std::string& name) { problems_.insert(name); }

  /// Records the edge only when the witness has been verified.
  template <class Source, class Target>
  bool record(const ReductionWitness<Source, Target>& w) {
    if (!w.verified()) return false;
    add(w.source().name);
    add(w.target().name);
    edges_[w.source().name].insert(w.target().name);
    return true;
  }

  bool reduces_to(const std::string& from, const std::string& to) const;
  bool closed(const std::string& name) const;
  const std::set<std::string>& problems() const noexcept { return problems_; }

 private:
  std::set<std::string> problems_;
  std::map<std::string, std::set<std::string>> edges_;
};

}  // namespace tamewild
