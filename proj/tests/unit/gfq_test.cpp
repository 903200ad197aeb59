// Copyright 2026 The crcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <vector>

#include "crcodes/gfq.hpp"
#include "test_util.hpp"

namespace crcodes {
namespace {

TEST(Field, Gf2) {
  auto f = Field::make(2, 1);
  EXPECT_EQ(f->q(), 2u);
  EXPECT_EQ(f->primitive(), 1);
  EXPECT_EQ(f->add(1, 1), 0);
}

TEST(Field, Gf3) {
  auto f = Field::make(3, 1);
  EXPECT_EQ(f->primitive(), 2);
  EXPECT_EQ(f->mul(2, 2), 1);
  EXPECT_EQ(f->neg(1), 2);
}

TEST(Field, Gf4Modulus) {
  auto f = Field::make(2, 2);
  EXPECT_EQ(f->modulus(), (std::vector<Elem>{1, 1, 1}));
  EXPECT_EQ(f->primitive(), 2);
  EXPECT_EQ(f->mul(2, 2), 3);
  EXPECT_EQ(f->order_of(2), 3u);
}

TEST(Field, Gf8Modulus) {
  // x^3 + x + 1
  auto f = Field::make(2, 3);
  EXPECT_EQ(f->modulus(), (std::vector<Elem>{1, 1, 0, 1}));
  EXPECT_EQ(f->primitive(), 2);
}

TEST(Field, Errors) {
  EXPECT_CRCODES_ERROR(Field::make(4, 1), NonPrimeP);
  EXPECT_CRCODES_ERROR(Field::make(2, 9), FieldTooLarge);
  EXPECT_CRCODES_ERROR(Field::of_order(6), NonPrimeP);
  auto f = Field::make(5, 1);
  EXPECT_CRCODES_ERROR(f->inv(0), InvOfZero);
}

TEST(Field, OfOrderMatchesMake) {
  EXPECT_TRUE(*Field::of_order(9) == *Field::make(3, 2));
  EXPECT_TRUE(*Field::of_order(256) == *Field::make(2, 8));
}

// exhaustive axioms on every field of order <= 16
class FieldAxioms : public ::testing::TestWithParam<unsigned> {};

TEST_P(FieldAxioms, Hold) {
  auto f = Field::of_order(GetParam());
  const unsigned q = f->q();
  for (unsigned a = 0; a < q; ++a) {
    const Elem x = static_cast<Elem>(a);
    EXPECT_EQ(f->add(x, 0), x);
    EXPECT_EQ(f->mul(x, 1), x);
    EXPECT_EQ(f->add(x, f->neg(x)), 0);
    if (x != 0) EXPECT_EQ(f->mul(x, f->inv(x)), 1);
    for (unsigned b = 0; b < q; ++b) {
      const Elem y = static_cast<Elem>(b);
      EXPECT_EQ(f->add(x, y), f->add(y, x));
      EXPECT_EQ(f->mul(x, y), f->mul(y, x));
      EXPECT_EQ(f->sub(f->add(x, y), y), x);
      for (unsigned c = 0; c < q; ++c) {
        const Elem z = static_cast<Elem>(c);
        ASSERT_EQ(f->mul(x, f->add(y, z)), f->add(f->mul(x, y), f->mul(x, z)));
        ASSERT_EQ(f->mul(f->mul(x, y), z), f->mul(x, f->mul(y, z)));
        ASSERT_EQ(f->add(f->add(x, y), z), f->add(x, f->add(y, z)));
      }
    }
  }
  EXPECT_EQ(f->order_of(f->primitive()), q - 1);
  EXPECT_EQ(f->pow(f->primitive(), q - 1), 1);
}

INSTANTIATE_TEST_SUITE_P(SmallOrders, FieldAxioms, ::testing::Values(2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u));

TEST(Field, ExtensionOverGf4) {
  auto base = Field::of_order(4);
  auto f = Field::extension(base, 2);
  EXPECT_EQ(f->q(), 16u);
  EXPECT_EQ(f->base_order(), 4u);
  EXPECT_EQ(f->order_of(f->primitive()), 15u);
  for (unsigned a = 0; a < 16; ++a) {
    const auto coords = f->coordinates(static_cast<Elem>(a));
    ASSERT_EQ(coords.size(), 2u);
    EXPECT_EQ(f->from_coordinates(coords), a);
  }
}

TEST(Field, PrimePower) {
  unsigned p = 0, m = 0;
  EXPECT_TRUE(prime_power(27, p, m));
  EXPECT_EQ(p, 3u);
  EXPECT_EQ(m, 3u);
  EXPECT_FALSE(prime_power(12, p, m));
  EXPECT_FALSE(prime_power(1, p, m));
  EXPECT_TRUE(is_prime(251));
  EXPECT_FALSE(is_prime(1));
}

}  // namespace
}  // namespace crcodes
