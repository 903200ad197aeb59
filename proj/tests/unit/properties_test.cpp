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

#include <algorithm>
#include <numeric>
#include <random>

#include "crcodes/analysis.hpp"
#include "crcodes/cosets.hpp"
#include "test_util.hpp"

namespace crcodes {
namespace {

std::vector<LinearCode> suite() {
  return {construction_I(2, 3, 1),        construction_I(2, 3, 2),
          construction_I(2, 3, 4),        construction_I(3, 3, 2),
          construction_I(4, 2, 2),        construction_II(2, 3, 1),
          construction_II(2, 3, 3),       extend_code(construction_I(2, 3, 2)),
          extend_code(construction_I(2, 3, 3)), extend_code(construction_II(2, 3, 2)),
          sporadic_code(SporadicId::Item1), sporadic_code(SporadicId::Item1Extended),
          sporadic_code(SporadicId::Item2)};
}

GFMatrix random_parity(std::mt19937_64& rng, const FieldRef& f, std::size_t r, std::size_t n) {
  GFMatrix h(f, r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) h.set(i, j, static_cast<Elem>(rng() % f->q()));
  return h;
}

TEST(Properties, CoveringRadiusAtMostExternalDistance) {
  for (const auto& c : suite()) {
    auto a = analyze_cosets(c);
    auto r = verify_completely_regular(a);
    const auto s = external_distance(c);
    EXPECT_LE(a.rho, s) << c.n();
    if (r.is_cr) EXPECT_EQ(a.rho, s) << c.n();
  }
}

TEST(Properties, IntersectionArrayIdentities) {
  for (const auto& c : suite()) {
    auto a = analyze_cosets(c);
    auto r = verify_completely_regular(a);
    if (!r.is_cr) continue;
    const auto& ia = *r.ia;
    const auto v = a.valency();
    for (std::size_t l = 0; l <= ia.rho(); ++l) {
      const std::uint64_t b = l < ia.rho() ? ia.b[l] : 0;
      const std::uint64_t cc = l > 0 ? ia.c[l - 1] : 0;
      EXPECT_EQ(ia.a(l, v) + b + cc, v);
    }
    for (std::size_t i = 0; i < ia.rho(); ++i) {
      EXPECT_EQ(ia.b[i] * a.coset_counts[i], ia.c[i] * a.coset_counts[i + 1]) << c.n() << " level " << i;
    }
  }
}

TEST(Properties, UniformPackingIffQuasiPerfectAndTight) {
  for (const auto& c : suite()) {
    auto a = analyze_cosets(c);
    auto r = verify_completely_regular(a);
    if (!r.is_cr) continue;
    const auto d = min_distance(c);
    const auto e = (d - 1) / 2;
    const auto s = external_distance(c);
    if (a.rho != e + 1) {
      EXPECT_CRCODES_ERROR(uniformly_packed_params(c, a, d), NotQuasiPerfect);
      continue;
    }
    EXPECT_EQ(uniformly_packed_params(c, a, d).has_value(), s == e + 1) << c.n();
  }
}

TEST(Properties, CosetCountsSumToSyndromeSpace) {
  for (const auto& c : suite()) {
    auto a = analyze_cosets(c);
    const auto total = std::accumulate(a.coset_counts.begin(), a.coset_counts.end(), std::uint64_t{0});
    EXPECT_EQ(total, saturating_pow(c.q(), c.redundancy()));
    EXPECT_EQ(a.coset_counts[0], 1u);
  }
}

TEST(Properties, MacWilliamsRoundTripOnSuite) {
  for (const auto& c : suite()) {
    if (saturating_pow(c.q(), c.k()) > (1u << 20)) continue;
    auto w = weight_distribution(c);
    auto wd = macwilliams(w, c.n(), c.k(), c.q());
    EXPECT_EQ(macwilliams(wd, c.n(), c.n() - c.k(), c.q()), w);
    EXPECT_EQ(wd, dual_weight_distribution(c));
  }
}

TEST(Properties, SyndromeIsLinear) {
  std::mt19937_64 rng(11);
  auto f = Field::of_order(4);
  auto h = construction_I_parity(4, 2, 2);
  for (int t = 0; t < 200; ++t) {
    GFVector u(f, h.cols()), v(f, h.cols()), w(f, h.cols());
    const Elem beta = static_cast<Elem>(rng() % 4);
    for (std::size_t j = 0; j < h.cols(); ++j) {
      u[j] = static_cast<Elem>(rng() % 4);
      v[j] = static_cast<Elem>(rng() % 4);
      w[j] = f->add(f->mul(beta, u[j]), v[j]);
    }
    auto su = syndrome(h, u), sv = syndrome(h, v), sw = syndrome(h, w);
    for (std::size_t r = 0; r < h.rows(); ++r) ASSERT_EQ(sw[r], f->add(f->mul(beta, su[r]), sv[r]));
  }
}

TEST(Properties, BruteforceAgreesOnRandomCodes) {
  std::mt19937_64 rng(5);
  for (unsigned q : {2u, 3u, 4u}) {
    auto f = Field::of_order(q);
    for (int t = 0; t < 12; ++t) {
      const std::size_t n = q == 2 ? 6 + rng() % 7 : q == 3 ? 5 + rng() % 4 : 4 + rng() % 3;
      const std::size_t r = 1 + rng() % (n - 1);
      auto h = random_parity(rng, f, r, n);
      if (rank(h) == n) continue;
      auto c = LinearCode::from_parity(h);
      EXPECT_EQ(verify_cr_bruteforce(c), verify_completely_regular(c)) << "q=" << q << " n=" << n;
    }
  }
}

// x of weight w with gcd(n, w) = 1 has trivial stabiliser under cyclic shifts
TEST(Properties, ShiftsOfCoprimeWeight) {
  std::mt19937_64 rng(20161);
  auto f = Field::of_order(3);
  int checked = 0;
  while (checked < 1000) {
    const std::size_t n = 2 + rng() % 40;
    const std::size_t w = 1 + rng() % n;
    if (std::gcd(n, w) != 1) continue;
    std::vector<std::size_t> pos(n);
    std::iota(pos.begin(), pos.end(), std::size_t{0});
    std::shuffle(pos.begin(), pos.end(), rng);
    GFVector x(f, n);
    for (std::size_t i = 0; i < w; ++i) x[pos[i]] = static_cast<Elem>(1 + rng() % 2);
    for (std::size_t i = 1; i < n; ++i) ASSERT_FALSE(cyclic_shift(x, static_cast<long long>(i)) == x);
    EXPECT_EQ(cyclic_shift(x, static_cast<long long>(n)), x);
    ++checked;
  }
}

}  // namespace
}  // namespace crcodes
