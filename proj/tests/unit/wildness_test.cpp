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

#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "tamewild/equivalence.hpp"

namespace tamewild {
namespace {

const PrimeField F2(2);
const PrimeField F3(3);
const PrimeField F5(5);

NcPoly x(std::size_t i, PrimeField f) { return NcPoly::variable(2, i, f); }

MatrixTuple scalar_pair(std::size_t n, const std::pair<Fe, Fe>& lm) {
  return MatrixTuple({Matrix::scalar(n, lm.first), Matrix::scalar(n, lm.second)});
}

// Checks that a failing verdict's witness is what it claims to be.
void expect_replayable(const Transform& t, const Verdict& v) {
  ASSERT_TRUE(v.witness.has_value());
  const ContainmentWitness& w = *v.witness;
  EXPECT_EQ(nc_eval(t.polys()[0], w.left), w.left_image);
  EXPECT_EQ(nc_eval(t.polys()[0], w.right), w.right_image);
  EXPECT_EQ(sim_similar(w.left, w.right).has_value(), w.tuples_equivalent);
  EXPECT_EQ(similar_bruteforce(w.left_image, w.right_image).has_value(), w.images_similar);
  EXPECT_NE(w.tuples_equivalent, w.images_similar);
}

TEST(WildnessTest, ScalarSpecializeExamples) {
  EXPECT_TRUE(scalar_specialize(x(0, F5) * x(1, F5) - x(1, F5) * x(0, F5)).coefficients().empty());
  const ScalarTable sym = scalar_specialize(x(0, F5) * x(1, F5) + x(1, F5) * x(0, F5));
  EXPECT_EQ(sym.coefficients().size(), 1u);
  EXPECT_EQ(sym.coeff(1, 1).value(), 2u);
  const ScalarTable c = scalar_specialize(NcPoly::constant(2, F5(3)));
  EXPECT_EQ(c.coefficients().size(), 1u);
  EXPECT_EQ(c.coeff(0, 0).value(), 3u);
  EXPECT_TRUE(c.is_constant());
  try {
    scalar_specialize(NcPoly::variable(3, 0, F5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ArityMismatch);
  }
}

TEST(WildnessTest, ScalarSpecializationMatchesEvaluation) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 100; ++t) {
    const NcPoly f = testing::random_nc_poly(rng, 2, 4, 6, F5);
    const ScalarTable table = scalar_specialize(f);
    for (std::uint32_t l = 0; l < 5; ++l)
      for (std::uint32_t m = 0; m < 5; ++m)
        EXPECT_EQ(nc_eval(f, scalar_pair(2, {F5(l), F5(m)})), Matrix::scalar(2, table(F5(l), F5(m))));
  }
}

TEST(WildnessTest, CollisionExamples) {
  const auto sum = scalar_collision_search(scalar_specialize(x(0, F5) + x(1, F5)), 5);
  ASSERT_TRUE(sum.has_value());
  EXPECT_EQ(sum->first, std::pair(F5(0), F5(1)));
  EXPECT_EQ(sum->second, std::pair(F5(1), F5(0)));
  EXPECT_EQ(sum->value.value(), 1u);

  const auto c = scalar_collision_search(scalar_specialize(NcPoly::constant(2, F5(2))), 5);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->first, std::pair(F5(0), F5(0)));
  EXPECT_EQ(c->second, std::pair(F5(0), F5(1)));

  try {
    scalar_collision_search(ScalarTable(PrimeField(103)), 103);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooLarge);
  }
}

TEST(WildnessTest, EveryNonConstantTableOverF5Collides) {
  std::mt19937_64 rng(52);
  std::uniform_int_distribution<int> coef(0, 4), expo(0, 6);
  int checked = 0;
  while (checked < 300) {
    ScalarTable table(F5);
    for (int k = 0; k < 4; ++k) table.add(expo(rng), expo(rng), F5(coef(rng)));
    if (table.is_constant()) continue;
    ++checked;
    const auto c = scalar_collision_search(table, 5);
    ASSERT_TRUE(c.has_value());
    EXPECT_NE(c->first, c->second);
    EXPECT_EQ(table(c->first.first, c->first.second), c->value);
    EXPECT_EQ(table(c->second.first, c->second.second), c->value);
  }
}

TEST(WildnessTest, FalsifyProjection) {
  const Transform t(2, {x(0, F2)});
  const Verdict v = falsify_containment(t, 2, F2);
  EXPECT_EQ(v.outcome, Outcome::FailsCondition2);
  EXPECT_EQ(v.stage, 1);
  const Matrix z(2, 2, F2);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->left, MatrixTuple({z, z}));
  EXPECT_EQ(v.witness->right, MatrixTuple({z, Matrix::identity(2, F2)}));
  expect_replayable(t, v);
}

TEST(WildnessTest, FalsifyCommutatorNeedsExhaustiveStage) {
  const Transform t(2, {x(0, F2) * x(1, F2) - x(1, F2) * x(0, F2)});
  const Verdict v = falsify_containment(t, 2, F2);
  EXPECT_EQ(v.outcome, Outcome::DegenerateOnScalars);
  EXPECT_TRUE(v.degenerate_on_scalars);
  EXPECT_EQ(v.stage, 2);
  EXPECT_TRUE(v.falsified());
  ASSERT_TRUE(v.witness.has_value());
  // First disagreeing pair in enumeration order.
  const Matrix z(2, 2, F2);
  EXPECT_EQ(v.witness->left, MatrixTuple({z, z}));
  EXPECT_EQ(v.witness->right, MatrixTuple({z, Matrix::unit(2, 1, 1, F2)}));
  EXPECT_TRUE(v.witness->left_image.is_zero());
  EXPECT_TRUE(v.witness->right_image.is_zero());
  expect_replayable(t, v);

  // ((0,0),(e12,e12)) is another valid witness, just not the first one.
  const MatrixTuple e12({Matrix::unit(2, 0, 1, F2), Matrix::unit(2, 0, 1, F2)});
  EXPECT_TRUE(nc_eval(t.polys()[0], e12).is_zero());
  EXPECT_FALSE(sim_similar(MatrixTuple({z, z}), e12).has_value());
}

TEST(WildnessTest, FalsifyConstant) {
  const Transform t(2, {NcPoly::constant(2, F3(2))});
  const Verdict v = falsify_containment(t, 2, F3);
  EXPECT_EQ(v.outcome, Outcome::FailsCondition2);
  EXPECT_EQ(v.stage, 1);
  expect_replayable(t, v);
}

TEST(WildnessTest, FalsifySumOverF5UsesScalarCollision) {
  const Transform t(2, {x(0, F5) + x(1, F5)});
  const Verdict v = falsify_containment(t, 2, F5);
  EXPECT_EQ(v.outcome, Outcome::FailsCondition2);
  ASSERT_TRUE(v.collision.has_value());
  EXPECT_EQ(v.collision->first, std::pair(F5(0), F5(1)));
  EXPECT_EQ(v.collision->second, std::pair(F5(1), F5(0)));
  expect_replayable(t, v);
}

TEST(WildnessTest, GuardLimitedDegenerateTransformIsNotFalsified) {
  // p^(2n^2) = 5^8 pairs exceeds the exhaustive guard.
  const Transform t(2, {x(0, F5) * x(1, F5) - x(1, F5) * x(0, F5)});
  const Verdict v = falsify_containment(t, 2, F5);
  EXPECT_EQ(v.outcome, Outcome::NotFalsified);
  EXPECT_TRUE(v.guard_limited);
  EXPECT_TRUE(v.degenerate_on_scalars);
  EXPECT_FALSE(v.falsified());
}

TEST(WildnessTest, FalsifyArityErrors) {
  try {
    falsify_containment(Transform::identity(2, F2), 2, F2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ArityMismatch);
  }
}

TEST(WildnessTest, DegenerateFamilyOverF3IsFalsifiedExhaustively) {
  // Commutator-like transforms vanish on scalars; only the exhaustive stage
  // can refute them.
  const NcPoly comm = x(0, F3) * x(1, F3) - x(1, F3) * x(0, F3);
  for (const NcPoly& f : {comm, comm * F3(2), comm * x(0, F3), x(0, F3) * comm}) {
    const Transform t(2, {f});
    const Verdict v = falsify_containment(t, 1, F3);
    // For n = 1 everything commutes, images are all zero.
    EXPECT_TRUE(v.falsified());
  }
}

}  // namespace
}  // namespace tamewild
