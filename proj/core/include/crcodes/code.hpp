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
#include <functional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "crcodes/matgf.hpp"

namespace crcodes {

using BigCount = boost::multiprecision::cpp_int;

// Enumeration limits. Every operation that enumerates checks its limit up front
// and throws TooLarge rather than switching algorithm behind the caller's back.
struct Budget {
  std::uint64_t codewords = std::uint64_t{1} << 24;
  std::uint64_t syndromes = std::uint64_t{1} << 26;
  std::uint64_t bruteforce = std::uint64_t{1} << 20;

  // Every limit set to `limit`.
  static Budget uniform(std::uint64_t limit) { return {limit, limit, limit}; }
  // Defaults, with CRCODES_BUDGET (if set to a positive integer) applied uniformly.
  static Budget from_env();
};

// q^e, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t q, std::uint64_t e) noexcept;

// A linear [n, k]_q code. H is kept exactly as supplied (it may be rank
// deficient); the effective redundancy is n - k.
class LinearCode {
 public:
  // Throws EmptyCode if rank(H) = n.
  static LinearCode from_parity(GFMatrix parity);

  const FieldRef& field() const noexcept { return parity_.field(); }
  std::size_t n() const noexcept { return parity_.cols(); }
  std::size_t k() const noexcept { return generator_.rows(); }
  std::size_t redundancy() const noexcept { return parity_basis_.rows(); }
  unsigned q() const noexcept { return field()->q(); }

  const GFMatrix& parity() const noexcept { return parity_; }
  const GFMatrix& parity_basis() const noexcept { return parity_basis_; }
  const GFMatrix& generator() const noexcept { return generator_; }

  bool contains(const GFVector& v) const;
  // Equality as sets of codewords.
  bool same_code(const LinearCode& other) const;

 private:
  friend LinearCode dual(const LinearCode& c);
  LinearCode(GFMatrix parity, GFMatrix parity_basis, GFMatrix generator);

  GFMatrix parity_;
  GFMatrix parity_basis_;
  GFMatrix generator_;
};

LinearCode dual(const LinearCode& c);
// Coordinate n+1 is appended last and makes the coordinate sum zero. The new
// parity matrix is H with a zero column appended, plus the all-one row.
LinearCode extend_code(const LinearCode& c);

// A_0..A_n.
struct WeightDistribution {
  std::vector<BigCount> counts;

  std::size_t length() const noexcept { return counts.empty() ? 0 : counts.size() - 1; }
  BigCount total() const;
  // Weights w > 0 with A_w != 0, ascending.
  std::vector<std::size_t> nonzero_weights() const;
  const BigCount& operator[](std::size_t w) const { return counts[w]; }
  bool operator==(const WeightDistribution&) const = default;
};

// Visits every codeword once (message space in odometer order).
void for_each_codeword(const LinearCode& c, const Budget& budget,
                       const std::function<void(std::span<const Elem>)>& visit);

// Exhaustive over the q^k codewords; throws TooLarge past budget.codewords.
WeightDistribution weight_distribution(const LinearCode& c, const Budget& budget = {});
// Direct enumeration when q^k fits, otherwise the dual is enumerated and transformed.
WeightDistribution weight_distribution_any(const LinearCode& c, const Budget& budget = {});
// Distribution of the dual code, by whichever side is enumerable.
WeightDistribution dual_weight_distribution(const LinearCode& c, const Budget& budget = {});

// Krawtchouk value K_j(i) for length n over an alphabet of size q.
BigCount krawtchouk(std::size_t n, unsigned q, std::size_t j, std::size_t i);
// Distribution of the dual of an [n, k]_q linear code with distribution w.
// Throws NonIntegerOutput if any coefficient is fractional or negative.
WeightDistribution macwilliams(const WeightDistribution& w, std::size_t n, std::size_t k, unsigned q);

// Smallest nonzero codeword weight. Enumerates C when q^k fits the budget,
// otherwise searches linearly dependent sets of at most 5 columns of H.
std::size_t min_distance(const LinearCode& c, const Budget& budget = {});
// Number of distinct nonzero weights of the dual code.
std::size_t external_distance(const LinearCode& c, const Budget& budget = {});

// Calls visit(positions, values) for every weight-w vector of length n over
// GF(q); positions ascending, values nonzero. Throws TooLarge if the count
// C(n, w)(q-1)^w exceeds `limit`.
void for_each_vector_of_weight(std::size_t n, unsigned q, std::size_t w, std::uint64_t limit,
                               const std::function<void(std::span<const std::size_t>, std::span<const Elem>)>& visit);

// C_w, the codewords of weight w, found by testing every weight-w vector.
std::vector<GFVector> codewords_of_weight(const LinearCode& c, std::size_t w, const Budget& budget = {});

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

// Syndromes with respect to the row basis of H, read as base-q integers with
// the first basis row as the least significant digit.
class SyndromeIndexer {
 public:
  explicit SyndromeIndexer(const LinearCode& c);

  std::size_t digits() const noexcept { return digits_; }
  std::uint64_t size() const noexcept { return size_; }
  unsigned q() const noexcept { return q_; }

  // Index of scale * (column j of the row basis).
  std::uint64_t column(std::size_t j, Elem scale) const noexcept { return columns_[j * q_ + scale]; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t neg(std::uint64_t a) const noexcept;
  std::uint64_t of(std::span<const Elem> v) const;
  std::uint64_t of(const GFVector& v) const { return of(v.entries()); }
  std::vector<Elem> to_vector(std::uint64_t index) const;
  std::uint64_t from_vector(std::span<const Elem> syndrome) const;

 private:
  FieldRef field_;
  unsigned p_;
  unsigned q_;
  std::size_t digits_;
  std::uint64_t size_;
  std::vector<std::uint64_t> columns_;
};

}  // namespace crcodes
