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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "support/oracles.hpp"

namespace tamewild {
namespace {

Poly P(std::uint32_t p, std::initializer_list<std::int64_t> c) { return Poly::from_ints(PrimeField(p), c); }

TEST(PolyTest, CanonicalForm) {
  EXPECT_EQ(P(5, {1, 0, 0}).degree(), 0);
  EXPECT_EQ(P(5, {0, 0}).degree(), -1);
  EXPECT_TRUE(P(5, {5}).is_zero());
  EXPECT_EQ(to_string(P(2, {1, 1, 1})), "x^2+x+1");
  EXPECT_EQ(to_string(P(5, {3, 0, 0, 2})), "2*x^3+3");
  EXPECT_EQ(to_string(Poly(PrimeField(3))), "0");
}

TEST(PolyTest, DivmodExamples) {
  auto [q1, r1] = poly_divmod(P(2, {1, 0, 1}), P(2, {1}));
  EXPECT_EQ(q1, P(2, {1, 0, 1}));
  EXPECT_TRUE(r1.is_zero());

  auto [q2, r2] = poly_divmod(P(5, {-1, 0, 1}), P(5, {-1, 1}));
  EXPECT_EQ(q2, P(5, {1, 1}));
  EXPECT_TRUE(r2.is_zero());

  auto [q3, r3] = poly_divmod(P(3, {0, 1}), P(3, {0, 0, 1}));
  EXPECT_TRUE(q3.is_zero());
  EXPECT_EQ(r3, P(3, {0, 1}));
}

TEST(PolyTest, DivmodErrors) {
  try {
    poly_divmod(P(5, {1, 1}), Poly(PrimeField(5)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DivisionByZeroPoly);
  }
  try {
    poly_divmod(P(5, {1, 1}), P(7, {1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ModulusMismatch);
  }
}

TEST(PolyTest, DivmodReconstructsNumerator) {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 300; ++trial) {
      const Poly num = testing::random_poly(rng, 8, f);
      Poly den = testing::random_poly(rng, 8, f);
      if (den.is_zero()) den = Poly::constant(f.one());
      const auto [q, r] = poly_divmod(num, den);
      EXPECT_EQ(q * den + r, num);
      EXPECT_LT(r.degree(), den.degree());
    }
  }
}

TEST(PolyTest, GcdExamples) {
  EXPECT_EQ(poly_gcd_monic(P(5, {2, 4}), Poly(PrimeField(5))), P(5, {3, 1}));
  EXPECT_EQ(poly_gcd_monic(P(5, {-1, 0, 1}), P(5, {-1, 1})), P(5, {4, 1}));
  EXPECT_EQ(poly_gcd_monic(P(2, {0, 1}), P(2, {1, 1})), P(2, {1}));
  try {
    poly_gcd_monic(Poly(PrimeField(3)), Poly(PrimeField(3)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BothZero);
  }
}

TEST(PolyTest, GcdDividesBothAndIsMonic) {
  std::mt19937_64 rng(12);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 300; ++trial) {
      // Plant a common factor so the gcd is usually non-trivial.
      const Poly common = testing::random_poly(rng, 3, f);
      const Poly a = testing::random_poly(rng, 5, f) * common;
      const Poly b = testing::random_poly(rng, 5, f) * common;
      if (a.is_zero() && b.is_zero()) continue;
      const Poly g = poly_gcd_monic(a, b);
      EXPECT_TRUE(g.is_monic());
      EXPECT_TRUE(poly_divmod(a, g).second.is_zero());
      EXPECT_TRUE(poly_divmod(b, g).second.is_zero());
      if (!common.is_zero()) EXPECT_TRUE(poly_divmod(g, common.monic()).second.is_zero());
    }
  }
}

TEST(PolyTest, EvalExamples) {
  const PrimeField f5(5), f7(7);
  for (std::uint32_t a = 0; a < 5; ++a) EXPECT_TRUE(poly_eval(Poly(f5), f5(a)).is_zero());
  EXPECT_EQ(poly_eval(P(5, {1, 1}), f5(4)).value(), 0u);
  EXPECT_EQ(poly_eval(P(7, {0, 0, 1}), f7(3)).value(), 2u);
  try {
    poly_eval(P(7, {0, 1}), f5(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ModulusMismatch);
  }
}

TEST(PolyTest, InterpolateExamples) {
  const PrimeField f5(5);
  const std::vector<std::pair<Fe, Fe>> one{{f5(3), f5(4)}};
  EXPECT_EQ(interpolate(one), P(5, {4}));
  const std::vector<std::pair<Fe, Fe>> two{{f5(0), f5(1)}, {f5(1), f5(2)}};
  EXPECT_EQ(interpolate(two), P(5, {1, 1}));
}

TEST(PolyTest, InterpolateErrors) {
  const PrimeField f5(5);
  try {
    interpolate(std::vector<std::pair<Fe, Fe>>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptyTable);
  }
  try {
    interpolate(std::vector<std::pair<Fe, Fe>>{{f5(1), f5(2)}, {f5(1), f5(3)}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DuplicateNode);
  }
}

TEST(PolyTest, InterpolateFullTableOverF7EvaluatesBack) {
  std::mt19937_64 rng(13);
  const PrimeField f(7);
  std::uniform_int_distribution<int> d(0, 6);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::pair<Fe, Fe>> nodes;
    for (int x = 0; x < 7; ++x) nodes.emplace_back(f(x), f(d(rng)));
    const Poly g = interpolate(nodes);
    EXPECT_LE(g.degree(), 6);
    for (const auto& [x, y] : nodes) EXPECT_EQ(g(x), y);
  }
}

TEST(PolyTest, InterpolateExhaustiveSmallTablesOverF3) {
  const PrimeField f(3);
  // Every choice of up to 3 distinct abscissas (as an ordered prefix of a
  // permutation) and every ordinate assignment.
  std::vector<int> xs{0, 1, 2};
  do {
    for (std::size_t k = 1; k <= 3; ++k) {
      for (int ys = 0; ys < 27; ++ys) {
        std::vector<std::pair<Fe, Fe>> nodes;
        int code = ys;
        for (std::size_t i = 0; i < k; ++i, code /= 3) nodes.emplace_back(f(xs[i]), f(code % 3));
        const Poly g = interpolate(nodes);
        EXPECT_LT(g.degree(), static_cast<int>(k));
        for (const auto& [x, y] : nodes) EXPECT_EQ(g(x), y);
      }
    }
  } while (std::next_permutation(xs.begin(), xs.end()));
}

TEST(PolyTest, InterpolateIgnoresNodeOrder) {
  std::mt19937_64 rng(14);
  const PrimeField f(11);
  std::uniform_int_distribution<int> d(0, 10);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> xs(11);
    std::iota(xs.begin(), xs.end(), 0);
    std::shuffle(xs.begin(), xs.end(), rng);
    xs.resize(6);
    std::vector<std::pair<Fe, Fe>> nodes;
    for (int x : xs) nodes.emplace_back(f(x), f(d(rng)));
    const Poly g = interpolate(nodes);
    std::shuffle(nodes.begin(), nodes.end(), rng);
    EXPECT_EQ(interpolate(nodes), g);
  }
}

TEST(PolyTest, ComposeAndFunctionReduction) {
  std::mt19937_64 rng(15);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 50; ++trial) {
      const Poly a = testing::random_poly(rng, 12, f);
      const Poly b = testing::random_poly(rng, 4, f);
      const Poly c = compose(a, b);
      const Poly r = reduce_as_function(c);
      EXPECT_LT(r.degree(), static_cast<int>(p));
      for (std::uint32_t v = 0; v < p; ++v) {
        EXPECT_EQ(c(f(v)), a(b(f(v))));
        EXPECT_EQ(r(f(v)), c(f(v)));
      }
    }
  }
}

}  // namespace
}  // namespace tamewild
