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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "crcodes/code.hpp"

namespace crcodes {

// {b_0..b_{rho-1}; c_1..c_rho}.
struct IntersectionArray {
  std::vector<std::uint64_t> b;
  std::vector<std::uint64_t> c;

  std::size_t rho() const noexcept { return b.size(); }
  // a_l = valency - b_l - c_l with c_0 = b_rho = 0; valency is (q-1)n.
  std::uint64_t a(std::size_t l, std::uint64_t valency) const;
  std::string to_string() const;
  bool operator==(const IntersectionArray&) const = default;
};

// Weight-one steps out of a coset, split by the leader weight they reach
// relative to the coset's own (one lower, equal, one higher).
struct StepProfile {
  std::uint32_t down = 0;
  std::uint32_t level = 0;
  std::uint32_t up = 0;
  bool operator==(const StepProfile&) const = default;
};

struct CosetAnalysis {
  std::size_t n = 0;
  std::size_t k = 0;
  unsigned q = 0;
  std::size_t rho = 0;
  // Indexed by syndrome (see SyndromeIndexer).
  std::vector<std::uint8_t> leader_weight;
  std::vector<StepProfile> profiles;
  // Number of cosets whose leader has weight i, i = 0..rho.
  std::vector<std::uint64_t> coset_counts;

  std::uint64_t valency() const noexcept { return std::uint64_t{q - 1} * n; }
  // |C(i)| = q^k * coset_counts[i].
  BigCount subconstituent_size(std::size_t i) const;
};

struct CRReport {
  bool is_cr = false;
  std::size_t rho = 0;
  std::optional<IntersectionArray> ia;
  std::vector<std::uint64_t> coset_counts;
  // On failure: two cosets (syndrome indices) or, from the brute-force path,
  // two vectors (base-q vector indices) at equal distance with different
  // step profiles. Not part of equality.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;

  bool operator==(const CRReport& o) const {
    return is_cr == o.is_cr && rho == o.rho && ia == o.ia && coset_counts == o.coset_counts;
  }
};

nlohmann::json to_json(const CRReport& report);

GFVector syndrome(const GFMatrix& h, const GFVector& v);

// Breadth-first search over the q^{n-k} syndromes starting at zero; BFS depth
// is the coset leader weight. Throws TooLarge past budget.syndromes.
CosetAnalysis analyze_cosets(const LinearCode& c, const Budget& budget = {});

CRReport verify_completely_regular(const CosetAnalysis& analysis);
CRReport verify_completely_regular(const LinearCode& c, const Budget& budget = {});

// Literal check over all q^n vectors: multi-source BFS from the codewords on
// the Hamming graph, then per-vector neighbour classification. Throws
// TooLarge past budget.bruteforce.
CRReport verify_cr_bruteforce(const LinearCode& c, const Budget& budget = {});

// Number of weight-w vectors in each coset, indexed by syndrome.
std::vector<std::uint64_t> coset_weight_slice(const LinearCode& c, std::size_t w, const Budget& budget = {});

struct UniformPacking {
  std::uint64_t lambda = 0;
  std::uint64_t mu = 0;
  bool operator==(const UniformPacking&) const = default;
};

// B_{x,e+1} taken as the number of codewords at distance exactly e+1 from x.
// Throws NotQuasiPerfect unless rho = e + 1. Absent when the counts are not
// constant on C(e) and C(e+1).
std::optional<UniformPacking> uniformly_packed_params(const LinearCode& c, const CosetAnalysis& analysis,
                                                      std::size_t min_dist, const Budget& budget = {});
std::optional<UniformPacking> uniformly_packed_params(const LinearCode& c, const Budget& budget = {});

}  // namespace crcodes
