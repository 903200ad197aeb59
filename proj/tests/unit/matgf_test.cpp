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

#include <random>

#include "crcodes/constructions.hpp"
#include "crcodes/matgf.hpp"
#include "test_util.hpp"

namespace crcodes {
namespace {

FieldRef gf2() { return Field::make(2, 1); }

GFMatrix hamming7() {
  return GFMatrix(gf2(), {{1, 0, 0, 1, 0, 1, 1}, {0, 1, 0, 1, 1, 1, 0}, {0, 0, 1, 0, 1, 1, 1}});
}

TEST(Rref, Identity) {
  auto id = GFMatrix::identity(gf2(), 3);
  auto r = rref(id);
  EXPECT_EQ(r.rank, 3u);
  EXPECT_EQ(r.matrix, id);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Rref, DuplicateRows) {
  auto r = rref(GFMatrix(gf2(), {{1, 1}, {1, 1}}));
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.matrix, GFMatrix(gf2(), {{1, 1}, {0, 0}}));
}

TEST(Rref, SporadicThreeRank) {
  auto h = sporadic_parity(SporadicId::Item3);
  EXPECT_EQ(h.rows(), 12u);
  EXPECT_EQ(h.cols(), 15u);
  EXPECT_EQ(rank(h), 6u);
}

TEST(Rref, Idempotent) {
  auto h = construction_I_parity(3, 3, 2);
  auto once = rref(h);
  auto twice = rref(once.matrix);
  EXPECT_EQ(once.matrix, twice.matrix);
  EXPECT_TRUE(row_space_equal(h, once.matrix));
}

TEST(NullSpace, Identity) {
  EXPECT_EQ(null_space(GFMatrix::identity(gf2(), 4)).rows(), 0u);
}

TEST(NullSpace, ZeroRow) {
  auto ns = null_space(GFMatrix(gf2(), 1, 5));
  EXPECT_EQ(ns.rows(), 5u);
  EXPECT_EQ(rank(ns), 5u);
}

TEST(NullSpace, HammingBasis) {
  auto h = hamming7();
  auto ns = null_space(h);
  ASSERT_EQ(ns.rows(), 4u);
  for (std::size_t r = 0; r < ns.rows(); ++r) {
    EXPECT_GE(ns.row_vector(r).weight(), 3u);
    EXPECT_TRUE(h.apply(ns.row_vector(r)).entries().size() == 3);
    EXPECT_EQ(h.apply(ns.row_vector(r)).weight(), 0u);
  }
}

TEST(NullSpace, RankNullity) {
  std::mt19937 rng(7);
  auto f = Field::of_order(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 8;
    GFMatrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, static_cast<Elem>(rng() % 5));
    auto ns = null_space(m);
    EXPECT_EQ(ns.rows() + rank(m), c);
    EXPECT_TRUE((m * ns.transpose()).is_zero());
  }
}

TEST(RowSpace, Equal) {
  auto h = hamming7();
  EXPECT_TRUE(row_space_equal(h, rref(h).matrix));
  EXPECT_TRUE(row_space_equal(GFMatrix::identity(gf2(), 2), GFMatrix(gf2(), {{1, 1}, {0, 1}})));
  EXPECT_FALSE(row_space_equal(GFMatrix(gf2(), {{1, 0}}), GFMatrix(gf2(), {{0, 1}})));
  EXPECT_CRCODES_ERROR(row_space_equal(GFMatrix(gf2(), 1, 2), GFMatrix(gf2(), 1, 3)), ColumnMismatch);
}

TEST(Matrix, InverseRoundTrip) {
  auto f = Field::of_order(4);
  GFMatrix m(f, {{1, 2, 0}, {0, 1, 3}, {2, 0, 1}});
  ASSERT_EQ(rank(m), 3u);
  EXPECT_EQ(m * inverse(m), GFMatrix::identity(f, 3));
  EXPECT_CRCODES_ERROR(inverse(GFMatrix(gf2(), {{1, 1}, {1, 1}})), BadShape);
}

TEST(Matrix, Stacking) {
  auto a = GFMatrix::identity(gf2(), 2);
  auto h = hstack(a, a);
  EXPECT_EQ(h.cols(), 4u);
  EXPECT_EQ(h.at(1, 3), 1);
  auto v = vstack(a, a);
  EXPECT_EQ(v.rows(), 4u);
  EXPECT_EQ(v.transpose(), h);
}

TEST(Matrix, TextRoundTrip) {
  auto h = construction_I_parity(4, 2, 2);
  auto back = parse_matrix_text(to_text(h));
  EXPECT_EQ(back, h);
  EXPECT_TRUE(*back.field() == *h.field());
  EXPECT_CRCODES_ERROR(parse_matrix_text("2 1 2 2\n1 0\n"), ParseError);
  EXPECT_CRCODES_ERROR(parse_matrix_text("2 1 1 2\n1 2\n"), OutOfRange);
}

TEST(Vector, Distance) {
  GFVector a(gf2(), {1, 0, 1, 1});
  GFVector b(gf2(), {0, 0, 1, 0});
  EXPECT_EQ(a.weight(), 3u);
  EXPECT_EQ(hamming_distance(a, b), 2u);
}

}  // namespace
}  // namespace crcodes
