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

#include <gtest/gtest.h>

namespace tamewild {
namespace {

TEST(FieldTest, RejectsNonPrimeModuli) {
  for (std::uint32_t bad : {0u, 1u, 4u, 9u, 15u, 91u}) {
    try {
      PrimeField f(bad);
      FAIL() << bad << " accepted";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::NotPrime);
    }
  }
  EXPECT_NO_THROW(PrimeField(2));
  EXPECT_NO_THROW(PrimeField(2147483647u));
}

TEST(FieldTest, ReducesOnConstruction) {
  const PrimeField f7(7);
  EXPECT_EQ(f7(9).value(), 2u);
  EXPECT_EQ(f7(-1).value(), 6u);
  EXPECT_EQ(f7(-14).value(), 0u);
}

TEST(FieldTest, InverseExamples) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u}) EXPECT_EQ(field_inverse(PrimeField(p).one()).value(), 1u);
  EXPECT_EQ(field_inverse(PrimeField(5)(2)).value(), 3u);
  try {
    field_inverse(PrimeField(7).zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroInverse);
  }
}

TEST(FieldTest, InverseIsExhaustivelyCorrectUpTo101) {
  for (std::uint32_t p = 2; p <= 101; ++p) {
    if (!is_prime(p)) continue;
    const PrimeField f(p);
    for (std::uint32_t a = 1; a < p; ++a) {
      EXPECT_TRUE((f(a) * field_inverse(f(a))).is_one()) << a << " mod " << p;
    }
  }
}

TEST(FieldTest, MixingFieldsIsAnError) {
  try {
    (void)(PrimeField(5)(1) + PrimeField(7)(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ModulusMismatch);
  }
}

TEST(FieldTest, LargeModulusArithmeticDoesNotOverflow) {
  const PrimeField f(2147483647u);
  const Fe a = f(2147483646);
  EXPECT_EQ((a * a).value(), 1u);
  EXPECT_TRUE((a * a.inverse()).is_one());
  EXPECT_EQ(f(3).pow(2147483646).value(), 1u);  // Fermat
}

}  // namespace
}  // namespace tamewild
