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

#include "crcodes/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "crcodes/error.hpp"

namespace crcodes {

std::string_view to_string(Family f) noexcept { return f == Family::I ? "I" : "II"; }

unsigned hamming_length(unsigned q, unsigned k) {
  unsigned long long qk = 1;
  for (unsigned i = 0; i < k; ++i) {
    qk *= q;
    if (qk > Field::kMaxOrder) {
      throw Error(ErrorKind::FieldTooLarge, "q^k = " + std::to_string(q) + "^" + std::to_string(k) + " exceeds 256");
    }
  }
  return static_cast<unsigned>((qk - 1) / (q - 1));
}

unsigned FamilyParams::n() const { return hamming_length(q, k); }

void FamilyParams::validate() const {
  unsigned p = 0;
  unsigned m = 0;
  if (!prime_power(q, p, m)) throw Error(ErrorKind::NonPrimeP, "q = " + std::to_string(q) + " is not a prime power");
  if (k < 2) throw Error(ErrorKind::OutOfRange, "Hamming redundancy k must be at least 2");
  const unsigned len = n();
  if (std::gcd(len, q - 1) != 1) {
    throw Error(ErrorKind::NotCyclic, "gcd(" + std::to_string(len) + ", " + std::to_string(q - 1) + ") != 1");
  }
  const unsigned hi = family == Family::I ? len : len - 1;
  if (c < 1 || c > hi) {
    throw Error(ErrorKind::BadC, "c = " + std::to_string(c) + " outside [1, " + std::to_string(hi) + "] for family " +
                                     std::string(to_string(family)));
  }
}

GFVector cyclic_shift(const GFVector& x, long long i) {
  const auto n = static_cast<long long>(x.size());
  if (n == 0) return x;
  const long long s = ((i % n) + n) % n;
  std::vector<Elem> out(x.size());
  for (long long j = 0; j < n; ++j) out[static_cast<std::size_t>((j + s) % n)] = x[static_cast<std::size_t>(j)];
  return GFVector(x.field(), std::move(out));
}

GFMatrix shift_columns(const GFMatrix& h, long long i) {
  GFMatrix out(h.field(), h.rows(), h.cols());
  for (std::size_t r = 0; r < h.rows(); ++r) {
    const GFVector shifted = cyclic_shift(h.row_vector(r), i);
    std::copy(shifted.entries().begin(), shifted.entries().end(), out.row(r).begin());
  }
  return out;
}

GFMatrix cyclic_hamming(unsigned q, unsigned k) {
  FamilyParams probe{Family::I, q, k, 1};
  probe.validate();
  const unsigned n = probe.n();
  {
    // Needed by the dual-weight argument: a simplex word's weight q^{k-1}
    // is coprime to n, so no nonzero simplex word is shift-invariant.
    unsigned long long qk1 = 1;
    for (unsigned i = 1; i < k; ++i) qk1 *= q;
    if (std::gcd<unsigned long long>(n, qk1) != 1) throw Error(ErrorKind::NotCyclic, "gcd(n, q^{k-1}) != 1");
  }

  const FieldRef base = Field::of_order(q);
  const FieldRef ext = Field::extension(base, k);
  const Elem beta = ext->pow(ext->primitive(), q - 1);

  // Change of basis from the polynomial basis to {1, beta, .., beta^{k-1}}.
  GFMatrix powers(base, k, k);
  for (unsigned i = 0; i < k; ++i) {
    const auto coords = ext->coordinates(ext->pow(beta, i));
    for (unsigned r = 0; r < k; ++r) powers.set(r, i, coords[r]);
  }
  const GFMatrix to_beta = inverse(powers);

  GFMatrix poly_cols(base, k, n);
  for (unsigned j = 0; j < n; ++j) {
    const auto coords = ext->coordinates(ext->pow(beta, j));
    for (unsigned r = 0; r < k; ++r) poly_cols.set(r, j, coords[r]);
  }
  GFMatrix h = to_beta * poly_cols;

  // Columns must be pairwise independent: normalise each to a leading 1.
  const Field& f = *base;
  std::set<std::vector<Elem>> seen;
  for (unsigned j = 0; j < n; ++j) {
    std::vector<Elem> col(k);
    for (unsigned r = 0; r < k; ++r) col[r] = h.at(r, j);
    Elem lead = 0;
    for (Elem e : col) {
      if (e) {
        lead = e;
        break;
      }
    }
    if (lead == 0 || !seen.insert([&] {
          const Elem s = f.inv(lead);
          for (auto& e : col) e = f.mul(e, s);
          return col;
        }()).second) {
      throw Error(ErrorKind::NotCyclic, "Hamming columns are not pairwise independent");
    }
  }
  return h;
}

GFMatrix construction_I_parity(unsigned q, unsigned k, unsigned c) {
  FamilyParams{Family::I, q, k, c}.validate();
  const GFMatrix h = cyclic_hamming(q, k);
  const std::size_t n = h.cols();
  GFMatrix out(h.field(), 2 * k, c * n);
  for (unsigned j = 0; j < c; ++j) {
    out.paste(h, 0, j * n);
    out.paste(shift_columns(h, j + 1), k, j * n);
  }
  return out;
}

LinearCode construction_I(unsigned q, unsigned k, unsigned c) {
  return LinearCode::from_parity(construction_I_parity(q, k, c));
}

GFMatrix construction_II_parity(unsigned q, unsigned k, unsigned c) {
  FamilyParams{Family::II, q, k, c}.validate();
  const GFMatrix h = cyclic_hamming(q, k);
  const std::size_t n = h.cols();
  GFMatrix out(h.field(), 2 * k, (c + 3) * n);
  out.paste(h, 0, 0);
  out.paste(h, k, n);
  out.paste(h, 0, 2 * n);
  out.paste(h, k, 2 * n);
  for (unsigned j = 0; j < c; ++j) {
    out.paste(h, 0, (3 + j) * n);
    out.paste(shift_columns(h, j + 1), k, (3 + j) * n);
  }
  return out;
}

LinearCode construction_II(unsigned q, unsigned k, unsigned c) {
  return LinearCode::from_parity(construction_II_parity(q, k, c));
}

LinearCode build_family(const FamilyParams& params) {
  return params.family == Family::I ? construction_I(params.q, params.k, params.c)
                                    : construction_II(params.q, params.k, params.c);
}

// ---------------------------------------------------------------------------
// Sporadic codes

namespace {

GFMatrix block_k(const FieldRef& gf2, unsigned shift) {
  const GFMatrix k{gf2, {{1, 0, 1}, {0, 1, 1}}};
  return shift_columns(k, shift);
}

}  // namespace

SporadicId parse_sporadic_id(std::string_view id) {
  if (id.starts_with("sporadic")) id.remove_prefix(8);
  if (id == "1") return SporadicId::Item1;
  if (id == "1x") return SporadicId::Item1Extended;
  if (id == "2") return SporadicId::Item2;
  if (id == "3") return SporadicId::Item3;
  throw Error(ErrorKind::UnknownId, "unknown sporadic code id \"" + std::string(id) + "\"");
}

std::string_view to_string(SporadicId id) noexcept {
  switch (id) {
    case SporadicId::Item1: return "sporadic1";
    case SporadicId::Item1Extended: return "sporadic1x";
    case SporadicId::Item2: return "sporadic2";
    case SporadicId::Item3: return "sporadic3";
  }
  return "sporadic?";
}

DifferenceMatrix difference_matrix_2_3() {
  return {2, 3,
          {{0, 0, 0, 0, 0, 0},
           {0, 0, 1, 2, 2, 1},
           {0, 1, 0, 1, 2, 2},
           {0, 2, 1, 0, 1, 2},
           {0, 2, 2, 1, 0, 1},
           {0, 1, 2, 2, 1, 0}}};
}

bool difference_matrix_check(const DifferenceMatrix& d) {
  const std::size_t order = std::size_t{d.q} * d.u;
  if (d.q == 0 || d.u == 0 || d.entries.size() != order) throw Error(ErrorKind::BadShape, "difference matrix must have qu rows");
  for (const auto& row : d.entries) {
    if (row.size() != order) throw Error(ErrorKind::BadShape, "difference matrix must be square");
    for (unsigned v : row) {
      if (v >= d.q) throw Error(ErrorKind::BadShape, "entry outside Z_q");
    }
  }
  std::vector<unsigned> hits(d.q);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      if (a == b) continue;
      std::fill(hits.begin(), hits.end(), 0u);
      for (std::size_t j = 0; j < order; ++j) ++hits[(d.entries[a][j] + d.q - d.entries[b][j]) % d.q];
      for (unsigned h : hits) {
        if (h != d.u) return false;
      }
    }
  }
  return true;
}

GFMatrix expand_difference_matrix(const DifferenceMatrix& d, bool drop_first_column) {
  const FieldRef gf2 = Field::make(2, 1);
  const std::size_t rows = d.entries.size();
  const std::size_t first = drop_first_column ? 1 : 0;
  const std::size_t cols = rows ? d.entries[0].size() - first : 0;
  GFMatrix out(gf2, 2 * rows, 3 * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out.paste(block_k(gf2, d.entries[r][c + first]), 2 * r, 3 * c);
  }
  return out;
}

GFMatrix sporadic_parity(SporadicId id) {
  const FieldRef gf2 = Field::make(2, 1);
  switch (id) {
    case SporadicId::Item1:
    case SporadicId::Item1Extended: {
      // K 0 0 K K / 0 K 0 K K_1 / 0 0 K K K_2
      GFMatrix h(gf2, 6, 15);
      for (unsigned i = 0; i < 3; ++i) {
        h.paste(block_k(gf2, 0), 2 * i, 3 * i);
        h.paste(block_k(gf2, 0), 2 * i, 9);
        h.paste(block_k(gf2, i), 2 * i, 12);
      }
      if (id == SporadicId::Item1) return h;
      return extend_code(LinearCode::from_parity(h)).parity();
    }
    case SporadicId::Item2: return expand_difference_matrix(difference_matrix_2_3(), false);
    case SporadicId::Item3: return expand_difference_matrix(difference_matrix_2_3(), true);
  }
  throw Error(ErrorKind::UnknownId, "unknown sporadic code");
}

LinearCode sporadic_code(SporadicId id) { return LinearCode::from_parity(sporadic_parity(id)); }

std::optional<std::vector<std::size_t>> find_block_equivalence(const LinearCode& a, const LinearCode& b,
                                                               std::size_t block) {
  if (a.n() != b.n() || a.k() != b.k() || !(*a.field() == *b.field())) return std::nullopt;
  if (block == 0 || a.n() % block != 0) throw Error(ErrorKind::BadShape, "length is not a multiple of the block width");
  const std::size_t blocks = a.n() / block;
  if (blocks > 8) throw Error(ErrorKind::TooLarge, "block permutation search limited to 8 blocks");

  std::vector<std::size_t> order(blocks);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::size_t> image(a.n());
  const GFMatrix& ga = a.generator();
  const std::uint64_t rotations = saturating_pow(block, blocks);
  do {
    for (std::uint64_t code = 0; code < rotations; ++code) {
      std::uint64_t rest = code;
      for (std::size_t blk = 0; blk < blocks; ++blk) {
        const std::size_t rot = rest % block;
        rest /= block;
        for (std::size_t j = 0; j < block; ++j) image[blk * block + j] = order[blk] * block + (j + rot) % block;
      }
      GFMatrix moved(a.field(), ga.rows(), ga.cols());
      for (std::size_t r = 0; r < ga.rows(); ++r) {
        for (std::size_t j = 0; j < ga.cols(); ++j) moved.set(r, image[j], ga.at(r, j));
      }
      if (row_space_equal(moved, b.generator())) return image;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

}  // namespace crcodes
