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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "crcodes/constructions.hpp"
#include "crcodes/cosets.hpp"

namespace crcodes {

// Closed-form predictions for the concatenated families. All arithmetic is
// exact; a division with remainder throws NotIntegral.

// Family I needs 2 <= c <= n; family II needs 1 <= c <= n - 1 and excludes
// (q = 2, c = n - 1), which is a Hamming code. Throws OutOfRange.
IntersectionArray predicted_ia(const FamilyParams& params);

// Number of weight-3 codewords.
std::uint64_t predicted_c3(const FamilyParams& params);

struct PredictedWeight {
  std::uint64_t weight = 0;
  std::optional<std::uint64_t> count;  // known in closed form for family I only
  bool operator==(const PredictedWeight&) const = default;
};

// Nonzero dual weights in ascending order.
std::vector<PredictedWeight> predicted_dual_weights(const FamilyParams& params);

// Array of the extended family-II code with c = 2^{k-1} - 2, k >= 3.
IntersectionArray predicted_ia_extended_II(unsigned k);

// Coset counts (1, N, 2^{2k} - 1, 2^{k-1}(2^k - 1)) of that extended code.
std::vector<std::uint64_t> predicted_coset_counts_extended_II(unsigned k);

struct DesignParams {
  std::uint64_t t = 0;
  std::uint64_t v = 0;
  std::uint64_t block_size = 0;
  std::uint64_t lambda = 0;
  std::vector<std::uint64_t> lambda_i;  // lambda_0 .. lambda_t

  std::uint64_t blocks() const { return lambda_i.front(); }
  std::uint64_t replication() const { return lambda_i.at(1); }
};

// lambda * C(v - i, t - i) / C(w - i, t - i). Throws NotIntegral / OutOfRange.
std::uint64_t design_lambda_i(std::uint64_t t, std::uint64_t v, std::uint64_t w, std::uint64_t lambda, std::uint64_t i);
DesignParams design_params(std::uint64_t t, std::uint64_t v, std::uint64_t w, std::uint64_t lambda);

// lambda if every weight-t vector y has exactly lambda > 0 words x with
// d(y, x) = w - t (i.e. x covers y), absent otherwise. Throws MixedWeights if
// the words do not share one weight; TooLarge past budget.codewords.
std::optional<std::uint64_t> verify_design(std::span<const GFVector> words, std::size_t t, const Budget& budget = {});

// Both identities |C*_{w+1}|(w+1) = (n+1)|C_w| and (n-w)|C_w| = (w+1)|C_{w+1}|
// for every odd w with C_w nonempty. Throws NotExtensionPair unless
// extended = extend_code(code); OutOfRange for non-binary codes.
bool check_estesos(const LinearCode& code, const LinearCode& extended, const Budget& budget = {});

}  // namespace crcodes
