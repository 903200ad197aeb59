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

#include <cstdlib>

#include "crcodes/code.hpp"
#include "crcodes/constructions.hpp"
#include "test_util.hpp"

namespace crcodes {
namespace {

FieldRef gf2() { return Field::make(2, 1); }

LinearCode hamming7() { return LinearCode::from_parity(cyclic_hamming(2, 3)); }

WeightDistribution dist(std::initializer_list<int> xs) {
  WeightDistribution w;
  for (int x : xs) w.counts.emplace_back(x);
  return w;
}

TEST(Code, FromParity) {
  auto even = LinearCode::from_parity(GFMatrix(gf2(), {{1, 1, 1}}));
  EXPECT_EQ(even.n(), 3u);
  EXPECT_EQ(even.k(), 2u);
  EXPECT_EQ(hamming7().k(), 4u);
  auto s2 = sporadic_code(SporadicId::Item2);
  EXPECT_EQ(s2.n(), 18u);
  EXPECT_EQ(s2.k(), 12u);
  EXPECT_CRCODES_ERROR(LinearCode::from_parity(GFMatrix::identity(gf2(), 3)), EmptyCode);
}

TEST(Code, GeneratorIsOrthogonal) {
  for (auto c : {construction_I(3, 3, 2), construction_II(2, 3, 3), sporadic_code(SporadicId::Item1)}) {
    EXPECT_TRUE((c.parity() * c.generator().transpose()).is_zero());
    EXPECT_EQ(c.k() + c.redundancy(), c.n());
  }
}

TEST(Code, Dual) {
  auto s = dual(hamming7());
  EXPECT_EQ(s.k(), 3u);
  auto w = weight_distribution(s);
  EXPECT_EQ(w.nonzero_weights(), (std::vector<std::size_t>{4}));
  EXPECT_EQ(dual(construction_I(2, 3, 2)).k(), 6u);
  EXPECT_TRUE(dual(dual(construction_I(4, 2, 2))).same_code(construction_I(4, 2, 2)));
}

TEST(Code, WeightDistribution) {
  auto even = LinearCode::from_parity(GFMatrix(gf2(), {{1, 1, 1}}));
  EXPECT_EQ(weight_distribution(even), dist({1, 0, 3, 0}));
  EXPECT_EQ(weight_distribution(dual(hamming7())), dist({1, 0, 0, 0, 7, 0, 0, 0}));
  auto d = dual_weight_distribution(construction_I(2, 3, 2));
  EXPECT_EQ(d[0], 1);
  EXPECT_EQ(d[4], 14);
  EXPECT_EQ(d[8], 49);
  EXPECT_EQ(d.total(), 64);
}

TEST(Code, MacWilliams) {
  EXPECT_EQ(macwilliams(dist({1, 0, 0, 0, 7, 0, 0, 0}), 7, 3, 2), dist({1, 0, 0, 7, 7, 0, 0, 1}));
  // whole space F_2^4
  EXPECT_EQ(macwilliams(dist({1, 4, 6, 4, 1}), 4, 4, 2), dist({1, 0, 0, 0, 0}));
  EXPECT_CRCODES_ERROR(macwilliams(dist({1, 2, 0}), 2, 1, 2), NonIntegerOutput);
  EXPECT_CRCODES_ERROR(macwilliams(dist({1, 1}), 2, 1, 2), LengthMismatch);
}

TEST(Code, MacWilliamsRoundTrip) {
  for (auto c : {construction_I(2, 3, 3), construction_I(4, 2, 2), sporadic_code(SporadicId::Item2)}) {
    auto w = weight_distribution(c);
    auto wd = macwilliams(w, c.n(), c.k(), c.q());
    EXPECT_EQ(wd, weight_distribution(dual(c)));
    EXPECT_EQ(macwilliams(wd, c.n(), c.n() - c.k(), c.q()), w);
  }
}

TEST(Code, Krawtchouk) {
  // K_0 = 1, K_1(i) = (q-1)n - q i
  EXPECT_EQ(krawtchouk(7, 2, 0, 3), 1);
  EXPECT_EQ(krawtchouk(7, 2, 1, 3), 1);
  EXPECT_EQ(krawtchouk(5, 3, 1, 2), 4);
}

TEST(Code, MinDistance) {
  EXPECT_EQ(min_distance(hamming7()), 3u);
  EXPECT_EQ(min_distance(construction_I(2, 3, 2)), 3u);
  EXPECT_EQ(min_distance(sporadic_code(SporadicId::Item1Extended)), 4u);
  // 3^20 codewords: forces the column search
  Budget small;
  small.codewords = 1 << 13;
  EXPECT_EQ(min_distance(construction_I(3, 3, 2), small), 3u);
  EXPECT_EQ(min_distance(extend_code(construction_II(2, 3, 2)), small), 4u);
}

TEST(Code, ExternalDistance) {
  EXPECT_EQ(external_distance(hamming7()), 1u);
  EXPECT_EQ(external_distance(construction_I(2, 3, 2)), 2u);
  EXPECT_EQ(external_distance(construction_II(2, 3, 6)), 1u);
}

TEST(Code, Extend) {
  auto e = extend_code(hamming7());
  EXPECT_EQ(e.n(), 8u);
  EXPECT_EQ(e.k(), 4u);
  EXPECT_EQ(min_distance(e), 4u);
  auto s = extend_code(sporadic_code(SporadicId::Item1));
  EXPECT_EQ(s.n(), 16u);
  EXPECT_EQ(s.k(), 9u);
  EXPECT_TRUE(s.same_code(sporadic_code(SporadicId::Item1Extended)));
  auto x = extend_code(construction_II(2, 3, 2));
  EXPECT_EQ(x.n(), 36u);
  EXPECT_EQ(x.k(), 29u);
}

TEST(Code, CodewordsOfWeight) {
  auto words = codewords_of_weight(hamming7(), 3);
  EXPECT_EQ(words.size(), 7u);
  for (const auto& w : words) EXPECT_TRUE(hamming7().contains(w));
  EXPECT_EQ(codewords_of_weight(construction_I(2, 3, 2), 3).size(), 14u);
}

TEST(Code, BudgetGuard) {
  EXPECT_CRCODES_ERROR(weight_distribution(construction_I(3, 3, 2), Budget::uniform(64)), TooLarge);
}

TEST(Code, BudgetFromEnv) {
  ::setenv("CRCODES_BUDGET", "1000", 1);
  auto b = Budget::from_env();
  EXPECT_EQ(b.codewords, 1000u);
  EXPECT_EQ(b.bruteforce, 1000u);
  ::unsetenv("CRCODES_BUDGET");
  EXPECT_EQ(Budget::from_env().codewords, Budget{}.codewords);
}

TEST(Code, Binomial) {
  EXPECT_EQ(binomial(36, 2), 630u);
  EXPECT_EQ(binomial(5, 7), 0u);
  EXPECT_EQ(binomial(64, 32), 1832624140942590534u);
}

TEST(Syndrome, IndexerRoundTrip) {
  auto c = construction_I(3, 3, 2);
  SyndromeIndexer ix(c);
  EXPECT_EQ(ix.size(), 729u);
  for (std::uint64_t s = 0; s < ix.size(); s += 17) {
    EXPECT_EQ(ix.from_vector(ix.to_vector(s)), s);
    EXPECT_EQ(ix.add(s, ix.neg(s)), 0u);
  }
}

}  // namespace
}  // namespace crcodes
