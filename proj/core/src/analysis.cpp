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

#include "crcodes/analysis.hpp"

#include <string>

#include "crcodes/error.hpp"

namespace crcodes {

namespace {

std::uint64_t exact_div(std::uint64_t num, std::uint64_t den, const char* what) {
  if (den == 0 || num % den != 0) {
    throw Error(ErrorKind::NotIntegral, std::string(what) + ": " + std::to_string(num) + " / " + std::to_string(den));
  }
  return num / den;
}

std::uint64_t pow_u(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

struct Checked {
  std::uint64_t q;
  std::uint64_t k;
  std::uint64_t n;
  std::uint64_t c;
};

Checked checked(const FamilyParams& p) {
  try {
    p.validate();
  } catch (const Error& e) {
    throw Error(ErrorKind::OutOfRange, e.what());
  }
  return {p.q, p.k, p.n(), p.c};
}

bool is_hamming_case(const Checked& p, Family f) { return f == Family::II && p.q == 2 && p.c == p.n - 1; }

}  // namespace

IntersectionArray predicted_ia(const FamilyParams& params) {
  const auto [q, k, n, c] = checked(params);
  if (params.family == Family::I) {
    if (c < 2) throw Error(ErrorKind::OutOfRange, "c = 1 gives the perfect Hamming code");
    return {{(q - 1) * n * c, ((q - 1) * n - c + 2) * (c - 1)}, {1, c * (c - 1)}};
  }
  if (is_hamming_case({q, k, n, c}, params.family)) {
    throw Error(ErrorKind::OutOfRange, "q = 2, c = n - 1 gives a perfect Hamming code");
  }
  return {{(c + 3) * n * (q - 1), (c + 2) * ((q - 1) * n - 1 - c)}, {1, (c + 2) * (c + 3)}};
}

std::uint64_t predicted_c3(const FamilyParams& params) {
  const auto [q, k, n, c] = checked(params);
  if (params.family == Family::I) {
    const std::uint64_t num = (q - 1) * c * n * ((q - 1) * (n - 1) + (c - 1) * (c - 2));
    return exact_div(num, 6, "family I weight-3 count");
  }
  const std::uint64_t num = (c + 3) * n * (q - 1) * ((n - 1) * (q - 1) + (c + 1) * (c + 2));
  return exact_div(num, 6, "family II weight-3 count");
}

std::vector<PredictedWeight> predicted_dual_weights(const FamilyParams& params) {
  const auto [q, k, n, c] = checked(params);
  const std::uint64_t qk1 = pow_u(q, static_cast<unsigned>(k - 1));
  const std::uint64_t qk = qk1 * q;
  if (params.family == Family::I) {
    if (c < 2) throw Error(ErrorKind::OutOfRange, "c = 1 gives the Hamming code");
    const std::uint64_t low = c * (qk - 1);
    return {{(c - 1) * qk1, low}, {c * qk1, qk * qk - low - 1}};
  }
  if (is_hamming_case({q, k, n, c}, params.family)) return {{pow_u(2, static_cast<unsigned>(2 * k - 1)), std::nullopt}};
  return {{(c + 2) * qk1, std::nullopt}, {(c + 3) * qk1, std::nullopt}};
}

IntersectionArray predicted_ia_extended_II(unsigned k) {
  if (k < 3 || k > 16) throw Error(ErrorKind::OutOfRange, "extended family II needs 3 <= k <= 16");
  const std::uint64_t h = pow_u(2, k - 1);
  const std::uint64_t big_n = h * (2 * h + 1);
  return {{big_n, big_n - 1, h * h}, {1, h * (h + 1), big_n}};
}

std::vector<std::uint64_t> predicted_coset_counts_extended_II(unsigned k) {
  if (k < 3 || k > 16) throw Error(ErrorKind::OutOfRange, "extended family II needs 3 <= k <= 16");
  const std::uint64_t h = pow_u(2, k - 1);
  const std::uint64_t two_k = 2 * h;
  return {1, h * (two_k + 1), two_k * two_k - 1, h * (two_k - 1)};
}

std::uint64_t design_lambda_i(std::uint64_t t, std::uint64_t v, std::uint64_t w, std::uint64_t lambda, std::uint64_t i) {
  if (i > t || t > w || w > v) throw Error(ErrorKind::OutOfRange, "need i <= t <= w <= v");
  const std::uint64_t num = lambda * binomial(v - i, t - i);
  return exact_div(num, binomial(w - i, t - i), "lambda_i");
}

DesignParams design_params(std::uint64_t t, std::uint64_t v, std::uint64_t w, std::uint64_t lambda) {
  DesignParams d{t, v, w, lambda, {}};
  for (std::uint64_t i = 0; i <= t; ++i) d.lambda_i.push_back(design_lambda_i(t, v, w, lambda, i));
  return d;
}

std::optional<std::uint64_t> verify_design(std::span<const GFVector> words, std::size_t t, const Budget& budget) {
  if (words.empty()) return std::nullopt;
  const std::size_t v = words.front().size();
  const unsigned q = words.front().field()->q();
  const std::size_t w = words.front().weight();
  for (const auto& x : words) {
    if (x.weight() != w || x.size() != v) throw Error(ErrorKind::MixedWeights, "design words must share length and weight");
  }
  if (t > w) return std::nullopt;

  const std::uint64_t subsets = binomial(v, t);
  const std::uint64_t labels = saturating_pow(q - 1, t);
  if (labels != 0 && subsets > budget.codewords / labels) {
    throw Error(ErrorKind::TooLarge, "too many weight-t vectors for the design check");
  }

  // Combinatorial-number-system rank of a sorted t-subset, times the base-(q-1)
  // label of its values.
  auto rank_of = [&](std::span<const std::size_t> pos, std::span<const Elem> val) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < pos.size(); ++i) r += binomial(pos[i], i + 1);
    std::uint64_t label = 0;
    for (std::size_t i = pos.size(); i-- > 0;) label = label * (q - 1) + (val[i] - 1u);
    return r * labels + label;
  };

  std::vector<std::uint32_t> covered(subsets * labels, 0);
  std::vector<std::size_t> support;
  std::vector<std::size_t> pick(t);
  std::vector<std::size_t> pos(t);
  std::vector<Elem> val(t);
  for (const auto& x : words) {
    support.clear();
    for (std::size_t i = 0; i < v; ++i) {
      if (x[i]) support.push_back(i);
    }
    for (std::size_t i = 0; i < t; ++i) pick[i] = i;
    while (true) {
      for (std::size_t i = 0; i < t; ++i) {
        pos[i] = support[pick[i]];
        val[i] = x[pos[i]];
      }
      ++covered[rank_of(pos, val)];
      std::size_t i = t;
      while (i > 0 && pick[i - 1] == w - t + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < t; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  const std::uint32_t lambda = covered.front();
  if (lambda == 0) return std::nullopt;
  for (auto cnt : covered) {
    if (cnt != lambda) return std::nullopt;
  }
  return lambda;
}

bool check_estesos(const LinearCode& code, const LinearCode& extended, const Budget& budget) {
  if (code.q() != 2 || extended.q() != 2) throw Error(ErrorKind::OutOfRange, "identity holds for binary codes");
  if (extended.n() != code.n() + 1 || !extended.same_code(extend_code(code))) {
    throw Error(ErrorKind::NotExtensionPair, "second code is not the extension of the first");
  }
  const auto a = weight_distribution_any(code, budget);
  const auto ax = weight_distribution_any(extended, budget);
  const std::size_t n = code.n();
  for (std::size_t w = 1; w <= n; w += 2) {
    if (a[w] == 0) continue;
    if (ax[w + 1] * (w + 1) != a[w] * (n + 1)) return false;
    const BigCount next = w + 1 <= n ? a[w + 1] : BigCount(0);
    if (a[w] * (n - w) != next * (w + 1)) return false;
  }
  return true;
}

}  // namespace crcodes
