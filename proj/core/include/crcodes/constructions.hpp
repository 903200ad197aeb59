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
#include <string>
#include <string_view>
#include <vector>

#include "crcodes/code.hpp"

namespace crcodes {

enum class Family { I, II };

std::string_view to_string(Family f) noexcept;

// Parameters of the two concatenated families. n = (q^k - 1)/(q - 1) is the
// length of the underlying cyclic Hamming code.
struct FamilyParams {
  Family family = Family::I;
  unsigned q = 2;
  unsigned k = 3;
  unsigned c = 2;

  unsigned n() const;
  // Checks q, k (NotCyclic / FieldTooLarge / OutOfRange) and the c range (BadC).
  void validate() const;
};

// (q^k - 1)/(q - 1).
unsigned hamming_length(unsigned q, unsigned k);

// sigma^i(x), the right cyclic shift applied i times (i reduced mod n, so
// negative i shifts left).
GFVector cyclic_shift(const GFVector& x, long long i);

// k x n parity-check matrix of the cyclic q-ary Hamming code. Column j is
// beta^j in the basis {1, beta, ..., beta^{k-1}} of GF(q^k) over GF(q), where
// beta = alpha^{q-1} has order n and alpha is the field's primitive element.
// Throws NotCyclic when gcd(n, q - 1) != 1.
GFMatrix cyclic_hamming(unsigned q, unsigned k);

// Every row r replaced by sigma^i(r).
GFMatrix shift_columns(const GFMatrix& h, long long i);

// [H H ... H ; H_1 H_2 ... H_c], 1 <= c <= n.
GFMatrix construction_I_parity(unsigned q, unsigned k, unsigned c);
LinearCode construction_I(unsigned q, unsigned k, unsigned c);

// [H 0 H H ... H ; 0 H H H_1 ... H_c], 1 <= c <= n - 1.
GFMatrix construction_II_parity(unsigned q, unsigned k, unsigned c);
LinearCode construction_II(unsigned q, unsigned k, unsigned c);

LinearCode build_family(const FamilyParams& params);

// Binary sporadic codes built from the 2 x 3 block K = [1 0 1; 0 1 1] and
// its column shifts K_1, K_2.
enum class SporadicId {
  Item1,          // [15, 9] from the 3 x 5 block layout
  Item1Extended,  // its extension, [16, 9]
  Item2,          // [18, 12] from D(2,3), entry i replaced by K_i
  Item3,          // [15, 9] from D(2,3) without its all-zero first column
};

// Accepts "1", "1x", "2", "3" (and the "sporadic" prefixed CLI names).
SporadicId parse_sporadic_id(std::string_view id);
std::string_view to_string(SporadicId id) noexcept;
LinearCode sporadic_code(SporadicId id);
GFMatrix sporadic_parity(SporadicId id);

// Searches coordinate permutations that permute the width-`block` column
// blocks and cyclically rotate inside each block. Returns the image position
// of every coordinate of `a` under a map sending `a` onto `b`, or nothing.
std::optional<std::vector<std::size_t>> find_block_equivalence(const LinearCode& a, const LinearCode& b,
                                                               std::size_t block);

// A qu x qu matrix over Z_q.
struct DifferenceMatrix {
  unsigned u = 0;
  unsigned q = 0;
  std::vector<std::vector<unsigned>> entries;
};

// The printed D(2, 3).
DifferenceMatrix difference_matrix_2_3();

// True iff the difference of every ordered pair of distinct rows contains each
// element of Z_q exactly u times. Throws BadShape on a malformed matrix.
bool difference_matrix_check(const DifferenceMatrix& d);

// Replaces every entry i of `d` (optionally skipping its first column) by K_i.
GFMatrix expand_difference_matrix(const DifferenceMatrix& d, bool drop_first_column);

}  // namespace crcodes
