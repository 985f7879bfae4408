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

#include "tamewild/matrix.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support/oracles.hpp"

namespace tamewild {
namespace {

const PrimeField F2(2);
const PrimeField F3(3);

TEST(MatrixTest, MulExamples) {
  std::mt19937_64 rng(1);
  const Matrix a = testing::random_matrix(rng, 3, 3, F3);
  EXPECT_EQ(mat_mul(Matrix::identity(3, F3), a), a);
  EXPECT_TRUE(mat_mul(a, Matrix(3, 3, F3)).is_zero());
  // e12 * e21 = e11 (1-based).
  EXPECT_EQ(mat_mul(Matrix::unit(2, 0, 1, F2), Matrix::unit(2, 1, 0, F2)), Matrix::unit(2, 0, 0, F2));
}

TEST(MatrixTest, MulErrors) {
  try {
    mat_mul(Matrix(2, 3, F2), Matrix(2, 3, F2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ShapeMismatch);
  }
  try {
    mat_mul(Matrix(2, 2, F2), Matrix(2, 2, F3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ModulusMismatch);
  }
}

TEST(MatrixTest, MulIsAssociativeWithUnit) {
  std::mt19937_64 rng(2);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const PrimeField f(p);
    for (std::size_t n = 1; n <= 4; ++n) {
      for (int t = 0; t < 20; ++t) {
        const Matrix a = testing::random_matrix(rng, n, n, f);
        const Matrix b = testing::random_matrix(rng, n, n, f);
        const Matrix c = testing::random_matrix(rng, n, n, f);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(Matrix::identity(n, f) * a, a);
        EXPECT_EQ(a * Matrix::identity(n, f), a);
      }
    }
  }
}

TEST(MatrixTest, RankExamples) {
  EXPECT_EQ(mat_rank(Matrix(2, 3, F3)), 0u);
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(mat_rank(Matrix::identity(n, F3)), n);
  EXPECT_EQ(mat_rank(Matrix::unit(2, 0, 1, F2)), 1u);
  EXPECT_EQ(mat_rank(Matrix::from_rows(F3, {{1, 2, 0}, {2, 1, 0}})), 1u);
}

TEST(MatrixTest, DetExamples) {
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_TRUE(mat_det(Matrix::identity(n, F3)).is_one());
  EXPECT_TRUE(mat_det(Matrix::from_rows(F3, {{1, 2, 1}, {0, 1, 1}, {1, 2, 1}})).is_zero());
  EXPECT_EQ(mat_det(Matrix::from_rows(F2, {{1, 1}, {0, 1}})).value(), 1u);
  // Row swap flips the sign: det [[0,1],[1,0]] = -1.
  EXPECT_EQ(mat_det(Matrix::from_rows(F3, {{0, 1}, {1, 0}})).value(), 2u);
  try {
    mat_det(Matrix(2, 3, F3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotSquare);
  }
}

TEST(MatrixTest, DetIsMultiplicative) {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const PrimeField f(p);
    for (std::size_t n = 1; n <= 4; ++n) {
      for (int t = 0; t < 30; ++t) {
        const Matrix a = testing::random_matrix(rng, n, n, f);
        const Matrix b = testing::random_matrix(rng, n, n, f);
        EXPECT_EQ(mat_det(a * b), mat_det(a) * mat_det(b));
      }
    }
  }
}

TEST(MatrixTest, InverseExamples) {
  EXPECT_EQ(mat_inverse(Matrix::identity(3, F3)), Matrix::identity(3, F3));
  const Matrix u = Matrix::from_rows(F2, {{1, 1}, {0, 1}});
  EXPECT_EQ(mat_inverse(u), u);
  try {
    mat_inverse(Matrix(2, 2, F2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Singular);
  }
  std::mt19937_64 rng(4);
  const PrimeField f7(7);
  for (int t = 0; t < 50; ++t) {
    const Matrix a = testing::random_invertible(rng, 4, f7);
    const Matrix b = mat_inverse(a);
    EXPECT_EQ(a * b, Matrix::identity(4, f7));
    EXPECT_EQ(b * a, Matrix::identity(4, f7));
  }
}

TEST(MatrixTest, RankIsConjugationInvariantOnM2F2) {
  for (const Matrix& s : enumerate_gl(2, F2)) {
    const Matrix s_inv = mat_inverse(s);
    for (const Matrix& a : enumerate_matrices(2, 2, F2)) EXPECT_EQ(mat_rank(s * a * s_inv), mat_rank(a));
  }
}

TEST(MatrixTest, EnumerateGlCounts) {
  auto count = [](std::size_t n, std::uint32_t p) {
    std::size_t c = 0;
    for (const Matrix& m : enumerate_gl(n, PrimeField(p))) {
      (void)m;
      ++c;
    }
    return c;
  };
  EXPECT_EQ(count(1, 2), 1u);
  EXPECT_EQ(count(2, 2), 6u);
  EXPECT_EQ(count(2, 3), 48u);
}

TEST(MatrixTest, EnumerateGlMatchesOrderFormulaWithoutDuplicates) {
  for (auto [n, p] : {std::pair<std::size_t, std::uint32_t>{1, 2}, {2, 2}, {2, 3}, {3, 2}}) {
    const PrimeField f(p);
    std::set<Matrix> seen;
    for (const Matrix& s : enumerate_gl(n, f)) {
      EXPECT_FALSE(mat_det(s).is_zero());
      EXPECT_TRUE(seen.insert(s).second);
    }
    EXPECT_EQ(seen.size(), gl_order(n, p));
  }
  EXPECT_EQ(gl_order(3, 2), 168u);
}

TEST(MatrixTest, EnumerationIsLexicographicAndRestartable) {
  const MatrixRange range = enumerate_matrices(2, 2, F3);
  std::uint64_t idx = 0;
  std::optional<Matrix> prev;
  for (const Matrix& m : range) {
    EXPECT_EQ(matrix_index(m), idx);
    EXPECT_EQ(matrix_at_index(2, 2, F3, idx), m);
    if (prev) EXPECT_LT(*prev, m);
    prev = m;
    ++idx;
  }
  EXPECT_EQ(idx, 81u);
  EXPECT_EQ(*range.begin(), Matrix(2, 2, F3));
}

TEST(MatrixTest, EnumerationGuard) {
  try {
    enumerate_gl(4, PrimeField(3));  // 3^16 > 10^7
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooLarge);
  }
}

TEST(MatrixTest, TupleIndexRoundTrip) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const MatrixTuple tup({testing::random_matrix(rng, 2, 2, F3), testing::random_matrix(rng, 2, 2, F3)});
    EXPECT_EQ(tuple_at_index(2, 2, F3, tuple_index(tup)), tup);
  }
  EXPECT_EQ(tuple_index(MatrixTuple({Matrix(2, 2, F2), Matrix::unit(2, 1, 1, F2)})), 1u);
}

TEST(MatrixTest, ConjugateTupleExamples) {
  std::mt19937_64 rng(6);
  const PrimeField f5(5);
  const MatrixTuple t({testing::random_matrix(rng, 3, 3, f5), testing::random_matrix(rng, 3, 3, f5)});
  EXPECT_EQ(conjugate_tuple(t, Matrix::identity(3, f5)), t);

  const MatrixTuple scalars({Matrix::scalar(3, f5(2)), Matrix::scalar(3, f5(4))});
  for (int k = 0; k < 20; ++k) {
    EXPECT_EQ(conjugate_tuple(scalars, testing::random_invertible(rng, 3, f5)), scalars);
  }

  const Matrix swap = Matrix::from_rows(F2, {{0, 1}, {1, 0}});
  EXPECT_EQ(conjugate_tuple(MatrixTuple({Matrix::unit(2, 0, 1, F2)}), swap), MatrixTuple({Matrix::unit(2, 1, 0, F2)}));

  try {
    conjugate_tuple(t, Matrix(3, 3, f5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Singular);
  }
  try {
    conjugate_tuple(t, Matrix::identity(2, f5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ShapeMismatch);
  }
}

TEST(MatrixTest, ConjugationRoundTripExhaustiveN2P2) {
  for (const Matrix& s : enumerate_gl(2, F2)) {
    const Matrix s_inv = mat_inverse(s);
    for (std::uint64_t idx = 0; idx < 256; ++idx) {
      const MatrixTuple t = tuple_at_index(2, 2, F2, idx);
      EXPECT_EQ(conjugate_tuple(conjugate_tuple(t, s), s_inv), t);
    }
  }
}

TEST(MatrixTest, TupleValidation) {
  try {
    MatrixTuple t({Matrix(2, 2, F2), Matrix(3, 3, F2)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ShapeMismatch);
  }
  try {
    MatrixTuple t({Matrix(2, 3, F2)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotSquare);
  }
}

}  // namespace
}  // namespace tamewild
