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

#include "crcodes/code.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>
#include <unordered_map>

#include "crcodes/error.hpp"

namespace crcodes {

Budget Budget::from_env() {
  Budget b;
  if (const char* env = std::getenv("CRCODES_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) b = uniform(v);
  }
  return b;
}

std::uint64_t saturating_pow(std::uint64_t q, std::uint64_t e) noexcept {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (q != 0 && r > kMax / q) return kMax;
    r *= q;
  }
  return r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  __extension__ using u128 = unsigned __int128;
  u128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

namespace {

void require(bool ok, std::uint64_t count, std::uint64_t limit, const char* what) {
  if (!ok || count > limit) {
    throw Error(ErrorKind::TooLarge, std::string(what) + " needs " +
                                         (ok ? std::to_string(count) : std::string("more than 2^64")) +
                                         " steps, budget is " + std::to_string(limit));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// LinearCode

LinearCode::LinearCode(GFMatrix parity, GFMatrix parity_basis, GFMatrix generator)
    : parity_(std::move(parity)), parity_basis_(std::move(parity_basis)), generator_(std::move(generator)) {}

LinearCode LinearCode::from_parity(GFMatrix parity) {
  GFMatrix basis = row_basis(parity);
  if (basis.rows() == parity.cols()) {
    throw Error(ErrorKind::EmptyCode, "parity-check matrix has full column rank " + std::to_string(basis.rows()));
  }
  GFMatrix gen = null_space(parity);
  return LinearCode(std::move(parity), std::move(basis), std::move(gen));
}

bool LinearCode::contains(const GFVector& v) const {
  if (v.size() != n()) throw Error(ErrorKind::LengthMismatch, "vector length differs from code length");
  for (std::size_t r = 0; r < parity_basis_.rows(); ++r) {
    const Field& f = *field();
    Elem acc = 0;
    auto row = parity_basis_.row(r);
    for (std::size_t c = 0; c < n(); ++c) acc = f.add(acc, f.mul(row[c], v[c]));
    if (acc != 0) return false;
  }
  return true;
}

bool LinearCode::same_code(const LinearCode& other) const {
  return n() == other.n() && k() == other.k() && *field() == *other.field() &&
         row_space_equal(generator_, other.generator_);
}

LinearCode dual(const LinearCode& c) {
  GFMatrix gen = c.parity_basis_;
  GFMatrix parity = c.generator_;
  GFMatrix basis = row_basis(parity);
  return LinearCode(std::move(parity), std::move(basis), std::move(gen));
}

LinearCode extend_code(const LinearCode& c) {
  const std::size_t n = c.n();
  GFMatrix h(c.field(), c.parity().rows(), n + 1);
  h.paste(c.parity(), 0, 0);
  std::vector<Elem> ones(n + 1, 1);
  h.append_row(ones);
  return LinearCode::from_parity(std::move(h));
}

// ---------------------------------------------------------------------------
// Weight distributions

BigCount WeightDistribution::total() const {
  BigCount t = 0;
  for (const auto& a : counts) t += a;
  return t;
}

std::vector<std::size_t> WeightDistribution::nonzero_weights() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 1; w < counts.size(); ++w) {
    if (counts[w] != 0) out.push_back(w);
  }
  return out;
}

void for_each_codeword(const LinearCode& c, const Budget& budget,
                       const std::function<void(std::span<const Elem>)>& visit) {
  const std::uint64_t total = saturating_pow(c.q(), c.k());
  require(total != std::numeric_limits<std::uint64_t>::max(), total, budget.codewords, "codeword enumeration");
  const Field& f = *c.field();
  const GFMatrix& g = c.generator();
  const std::size_t n = c.n();
  const std::size_t k = c.k();
  const Elem top = static_cast<Elem>(f.q() - 1);

  std::vector<Elem> word(n, 0);
  std::vector<Elem> msg(k, 0);
  auto add_row = [&](std::size_t i, Elem delta) {
    auto row = g.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j]) word[j] = f.add(word[j], f.mul(delta, row[j]));
    }
  };
  for (std::uint64_t step = 0; step < total; ++step) {
    visit(word);
    for (std::size_t i = 0; i < k; ++i) {
      const Elem old = msg[i];
      const Elem next = old == top ? Elem{0} : static_cast<Elem>(old + 1);
      msg[i] = next;
      add_row(i, f.sub(next, old));
      if (next != 0) break;
    }
  }
}

WeightDistribution weight_distribution(const LinearCode& c, const Budget& budget) {
  std::vector<std::uint64_t> counts(c.n() + 1, 0);
  for_each_codeword(c, budget, [&](std::span<const Elem> w) {
    std::size_t wt = 0;
    for (Elem e : w) wt += e != 0;
    ++counts[wt];
  });
  WeightDistribution out;
  out.counts.assign(counts.begin(), counts.end());
  return out;
}

WeightDistribution weight_distribution_any(const LinearCode& c, const Budget& budget) {
  if (saturating_pow(c.q(), c.k()) <= budget.codewords) return weight_distribution(c, budget);
  auto d = dual(c);
  return macwilliams(weight_distribution(d, budget), c.n(), d.k(), c.q());
}

WeightDistribution dual_weight_distribution(const LinearCode& c, const Budget& budget) {
  auto d = dual(c);
  if (saturating_pow(c.q(), d.k()) <= budget.codewords) return weight_distribution(d, budget);
  return macwilliams(weight_distribution(c, budget), c.n(), c.k(), c.q());
}

BigCount krawtchouk(std::size_t n, unsigned q, std::size_t j, std::size_t i) {
  using boost::multiprecision::pow;
  BigCount sum = 0;
  for (std::size_t s = 0; s <= j; ++s) {
    if (s > i || j - s > n - i) continue;
    BigCount term = pow(BigCount(q - 1), static_cast<unsigned>(j - s));
    term *= BigCount(binomial(i, s));
    term *= BigCount(binomial(n - i, j - s));
    if (s % 2) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

WeightDistribution macwilliams(const WeightDistribution& w, std::size_t n, std::size_t k, unsigned q) {
  using boost::multiprecision::pow;
  if (w.counts.size() != n + 1) throw Error(ErrorKind::LengthMismatch, "distribution length is not n + 1");
  const BigCount size = pow(BigCount(q), static_cast<unsigned>(k));
  WeightDistribution out;
  out.counts.resize(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    BigCount acc = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (w.counts[i] != 0) acc += w.counts[i] * krawtchouk(n, q, j, i);
    }
    if (acc < 0 || acc % size != 0) {
      throw Error(ErrorKind::NonIntegerOutput, "dual coefficient A'_" + std::to_string(j) + " is not a nonnegative integer");
    }
    out.counts[j] = acc / size;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Distances

std::size_t min_distance(const LinearCode& c, const Budget& budget) {
  if (c.k() == 0) throw Error(ErrorKind::EmptyCode, "code has no nonzero codeword");
  if (saturating_pow(c.q(), c.k()) <= budget.codewords) {
    const auto wd = weight_distribution(c, budget);
    return wd.nonzero_weights().front();
  }

  // Smallest w such that some w columns of H are linearly dependent. A
  // dependency is found when a combination of w - 1 columns (the first with
  // coefficient 1) is the negative of a multiple of a later column.
  SyndromeIndexer idx(c);
  const std::size_t n = c.n();
  const unsigned q = c.q();
  std::unordered_map<std::uint64_t, std::size_t> last_column;  // syndrome -> largest column index reaching it
  for (std::size_t j = 0; j < n; ++j) {
    for (unsigned b = 1; b < q; ++b) last_column[idx.column(j, static_cast<Elem>(b))] = j;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (idx.column(j, 1) == 0) return 1;
  }
  constexpr std::size_t kMaxSearch = 5;
  for (std::size_t w = 2; w <= kMaxSearch && w <= n; ++w) {
    const std::uint64_t cost = binomial(n, w - 1) * saturating_pow(q - 1, w - 2);
    require(true, cost, budget.codewords, "column dependency search");
    bool found = false;
    // Depth-first over increasing column tuples.
    std::function<void(std::size_t, std::size_t, std::uint64_t)> rec = [&](std::size_t depth, std::size_t start,
                                                                           std::uint64_t sum) {
      if (found) return;
      if (depth == w - 1) {
        auto it = last_column.find(idx.neg(sum));
        if (it != last_column.end() && it->second >= start) found = true;
        return;
      }
      for (std::size_t j = start; j < n && !found; ++j) {
        const unsigned lo = depth == 0 ? 1 : q - 1;
        for (unsigned b = 1; b <= lo && !found; ++b) {
          const Elem scale = depth == 0 ? Elem{1} : static_cast<Elem>(b);
          rec(depth + 1, j + 1, idx.add(sum, idx.column(j, scale)));
        }
      }
    };
    rec(0, 0, 0);
    if (found) return w;
  }
  throw Error(ErrorKind::TooLarge, "minimum distance exceeds the column search limit of 5");
}

std::size_t external_distance(const LinearCode& c, const Budget& budget) {
  return dual_weight_distribution(c, budget).nonzero_weights().size();
}

void for_each_vector_of_weight(std::size_t n, unsigned q, std::size_t w, std::uint64_t limit,
                               const std::function<void(std::span<const std::size_t>, std::span<const Elem>)>& visit) {
  if (w > n) return;
  const std::uint64_t combos = binomial(n, w);
  const std::uint64_t scales = saturating_pow(q - 1, w);
  const bool ok = combos == 0 || scales <= std::numeric_limits<std::uint64_t>::max() / combos;
  require(ok, ok ? combos * scales : 0, limit, "weight-w vector enumeration");

  std::vector<std::size_t> pos(w);
  for (std::size_t i = 0; i < w; ++i) pos[i] = i;
  std::vector<Elem> val(w, 1);
  while (true) {
    // All nonzero value assignments for this support.
    std::fill(val.begin(), val.end(), Elem{1});
    while (true) {
      visit(pos, val);
      std::size_t i = 0;
      while (i < w && val[i] == q - 1) val[i++] = 1;
      if (i == w) break;
      ++val[i];
    }
    // Next combination in lexicographic order.
    std::size_t i = w;
    while (i > 0 && pos[i - 1] == n - w + i - 1) --i;
    if (i == 0) break;
    ++pos[i - 1];
    for (std::size_t j = i; j < w; ++j) pos[j] = pos[j - 1] + 1;
  }
}

std::vector<GFVector> codewords_of_weight(const LinearCode& c, std::size_t w, const Budget& budget) {
  SyndromeIndexer idx(c);
  std::vector<GFVector> out;
  std::vector<Elem> word(c.n(), 0);
  for_each_vector_of_weight(c.n(), c.q(), w, budget.codewords,
                            [&](std::span<const std::size_t> pos, std::span<const Elem> val) {
                              std::uint64_t s = 0;
                              for (std::size_t i = 0; i < pos.size(); ++i) s = idx.add(s, idx.column(pos[i], val[i]));
                              if (s != 0) return;
                              std::fill(word.begin(), word.end(), Elem{0});
                              for (std::size_t i = 0; i < pos.size(); ++i) word[pos[i]] = val[i];
                              out.emplace_back(c.field(), word);
                            });
  return out;
}

// ---------------------------------------------------------------------------
// SyndromeIndexer

SyndromeIndexer::SyndromeIndexer(const LinearCode& c)
    : field_(c.field()), p_(c.field()->p()), q_(c.q()), digits_(c.redundancy()) {
  size_ = saturating_pow(q_, digits_);
  if (size_ == std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorKind::TooLarge, "syndrome space does not fit a 64-bit index");
  }
  const GFMatrix& h = c.parity_basis();
  columns_.resize(c.n() * q_);
  std::vector<Elem> col(digits_);
  const Field& f = *field_;
  for (std::size_t j = 0; j < c.n(); ++j) {
    for (unsigned b = 0; b < q_; ++b) {
      for (std::size_t r = 0; r < digits_; ++r) col[r] = f.mul(static_cast<Elem>(b), h.at(r, j));
      columns_[j * q_ + b] = from_vector(col);
    }
  }
}

// The index is also a base-p numeral (each GF(q) digit expands to m base-p
// digits), and field addition is digit-wise addition mod p.
std::uint64_t SyndromeIndexer::add(std::uint64_t a, std::uint64_t b) const noexcept {
  if (p_ == 2) return a ^ b;
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  while (a || b) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

std::uint64_t SyndromeIndexer::neg(std::uint64_t a) const noexcept {
  if (p_ == 2) return a;
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  while (a) {
    out += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return out;
}

std::uint64_t SyndromeIndexer::of(std::span<const Elem> v) const {
  if (v.size() * q_ != columns_.size()) throw Error(ErrorKind::LengthMismatch, "vector length differs from code length");
  std::uint64_t s = 0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j]) s = add(s, column(j, v[j]));
  }
  return s;
}

std::vector<Elem> SyndromeIndexer::to_vector(std::uint64_t index) const {
  std::vector<Elem> s(digits_);
  for (std::size_t r = 0; r < digits_; ++r) {
    s[r] = static_cast<Elem>(index % q_);
    index /= q_;
  }
  return s;
}

std::uint64_t SyndromeIndexer::from_vector(std::span<const Elem> syndrome) const {
  std::uint64_t out = 0;
  for (std::size_t r = syndrome.size(); r-- > 0;) out = out * q_ + syndrome[r];
  return out;
}

}  // namespace crcodes
