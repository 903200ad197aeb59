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

#include "crcodes/analysis.hpp"
#include "test_util.hpp"

namespace crcodes {
namespace {

TEST(Predict, IntersectionArrays) {
  EXPECT_EQ(predicted_ia({Family::I, 2, 3, 2}).to_string(), "{14, 7; 1, 2}");
  EXPECT_EQ(predicted_ia({Family::II, 2, 3, 1}).to_string(), "{28, 15; 1, 12}");
  EXPECT_EQ(predicted_ia({Family::I, 3, 3, 2}).to_string(), "{52, 26; 1, 2}");
  EXPECT_EQ(predicted_ia({Family::I, 4, 2, 2}).to_string(), "{30, 15; 1, 2}");
  EXPECT_CRCODES_ERROR(predicted_ia({Family::I, 2, 3, 1}), OutOfRange);
  EXPECT_CRCODES_ERROR(predicted_ia({Family::I, 2, 3, 9}), OutOfRange);
}

TEST(Predict, WeightThree) {
  EXPECT_EQ(predicted_c3({Family::I, 2, 3, 2}), 14u);
  EXPECT_EQ(predicted_c3({Family::II, 2, 3, 1}), 56u);
  EXPECT_EQ(predicted_c3({Family::II, 2, 3, 2}), 105u);
  EXPECT_EQ(predicted_c3({Family::I, 2, 3, 1}), 7u);
}

TEST(Predict, DualWeights) {
  auto a = predicted_dual_weights({Family::I, 2, 3, 2});
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0], (PredictedWeight{4, 14}));
  EXPECT_EQ(a[1], (PredictedWeight{8, 49}));
  auto b = predicted_dual_weights({Family::II, 2, 3, 6});
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].weight, 32u);
  auto c = predicted_dual_weights({Family::II, 2, 3, 1});
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].weight, 12u);
  EXPECT_EQ(c[1].weight, 16u);
  EXPECT_FALSE(c[0].count.has_value());
}

TEST(Predict, ExtendedFamily) {
  EXPECT_EQ(predicted_ia_extended_II(3).to_string(), "{36, 35, 16; 1, 20, 36}");
  EXPECT_EQ(predicted_ia_extended_II(4).to_string(), "{136, 135, 64; 1, 72, 136}");
  EXPECT_CRCODES_ERROR(predicted_ia_extended_II(2), OutOfRange);
  EXPECT_EQ(predicted_coset_counts_extended_II(3), (std::vector<std::uint64_t>{1, 36, 63, 28}));
}

TEST(Design, LambdaI) {
  EXPECT_EQ(design_lambda_i(2, 7, 3, 1, 1), 3u);
  EXPECT_EQ(design_lambda_i(2, 7, 3, 1, 0), 7u);
  EXPECT_EQ(design_lambda_i(2, 7, 3, 1, 2), 1u);
  EXPECT_EQ(design_lambda_i(2, 36, 4, 9, 0), 945u);
  EXPECT_CRCODES_ERROR(design_lambda_i(2, 8, 3, 1, 1), NotIntegral);
  EXPECT_CRCODES_ERROR(design_lambda_i(2, 7, 3, 1, 3), OutOfRange);
  auto p = design_params(2, 7, 3, 1);
  EXPECT_EQ(p.blocks(), 7u);
  EXPECT_EQ(p.replication(), 3u);
}

TEST(Design, Verify) {
  auto hamming = construction_I(2, 3, 1);
  auto c3 = codewords_of_weight(hamming, 3);
  EXPECT_EQ(verify_design(c3, 2), 1u);
  EXPECT_EQ(verify_design(c3, 1), 3u);

  auto ext = extend_code(construction_II(2, 3, 2));
  auto c4 = codewords_of_weight(ext, 4);
  EXPECT_EQ(c4.size(), 945u);
  EXPECT_EQ(verify_design(c4, 2), 9u);

  // one word covers only its own support
  EXPECT_FALSE(verify_design(std::span(c3).first(1), 3).has_value());
}

TEST(Design, MixedWeights) {
  auto f = Field::make(2, 1);
  std::vector<GFVector> words{GFVector(f, {1, 1, 0}), GFVector(f, {1, 1, 1})};
  EXPECT_CRCODES_ERROR(verify_design(words, 1), MixedWeights);
}

TEST(ExtensionIdentities, Pairs) {
  auto c = construction_II(2, 3, 2);
  EXPECT_TRUE(check_estesos(c, extend_code(c)));
  EXPECT_TRUE(check_estesos(sporadic_code(SporadicId::Item1), sporadic_code(SporadicId::Item1Extended)));
  EXPECT_CRCODES_ERROR(check_estesos(c, extend_code(construction_II(2, 3, 3))), NotExtensionPair);
  EXPECT_CRCODES_ERROR(check_estesos(construction_I(3, 3, 2), extend_code(construction_I(3, 3, 2))), OutOfRange);
}

}  // namespace
}  // namespace crcodes
