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

#include "crcodes/cosets.hpp"

#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "crcodes/error.hpp"

namespace crcodes {

namespace {

constexpr std::uint8_t kUnseen = 0xFF;

// Groups profiles by level. The witness is the first mismatch in index order,
// paired with the lowest index at that level.
CRReport assemble(std::size_t rho, const std::vector<std::uint8_t>& level, const std::vector<StepProfile>& profiles,
                  std::vector<std::uint64_t> counts) {
  CRReport report;
  report.rho = rho;
  report.coset_counts = std::move(counts);
  std::vector<std::optional<std::uint64_t>> first(rho + 1);
  for (std::uint64_t s = 0; s < level.size(); ++s) {
    auto& ref = first[level[s]];
    if (!ref) {
      ref = s;
    } else if (!(profiles[*ref] == profiles[s]) && !report.witness) {
      report.witness = std::make_pair(*ref, s);
    }
  }
  report.is_cr = !report.witness.has_value();
  if (report.is_cr) {
    IntersectionArray ia;
    for (std::size_t l = 0; l < rho; ++l) ia.b.push_back(profiles[*first[l]].up);
    for (std::size_t l = 1; l <= rho; ++l) ia.c.push_back(profiles[*first[l]].down);
    report.ia = std::move(ia);
  }
  return report;
}

}  // namespace

std::uint64_t IntersectionArray::a(std::size_t l, std::uint64_t valency) const {
  const std::uint64_t bl = l < b.size() ? b[l] : 0;
  const std::uint64_t cl = l == 0 ? 0 : c[l - 1];
  return valency - bl - cl;
}

std::string IntersectionArray::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < b.size(); ++i) os << (i ? ", " : "") << b[i];
  os << "; ";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? ", " : "") << c[i];
  os << '}';
  return os.str();
}

BigCount CosetAnalysis::subconstituent_size(std::size_t i) const {
  return boost::multiprecision::pow(BigCount(q), static_cast<unsigned>(k)) * coset_counts.at(i);
}

nlohmann::json to_json(const CRReport& report) {
  nlohmann::json j;
  j["is_cr"] = report.is_cr;
  j["rho"] = report.rho;
  j["b"] = report.ia ? report.ia->b : std::vector<std::uint64_t>{};
  j["c"] = report.ia ? report.ia->c : std::vector<std::uint64_t>{};
  j["coset_counts"] = report.coset_counts;
  if (report.witness) j["witness"] = {report.witness->first, report.witness->second};
  return j;
}

GFVector syndrome(const GFMatrix& h, const GFVector& v) {
  if (h.cols() != v.size()) throw Error(ErrorKind::LengthMismatch, "vector length differs from parity-check width");
  return h.apply(v);
}

CosetAnalysis analyze_cosets(const LinearCode& c, const Budget& budget) {
  const std::uint64_t size = saturating_pow(c.q(), c.redundancy());
  if (size > budget.syndromes) {
    throw Error(ErrorKind::TooLarge, std::to_string(c.q()) + "^" + std::to_string(c.redundancy()) +
                                         " syndromes exceed budget " + std::to_string(budget.syndromes));
  }
  SyndromeIndexer idx(c);
  CosetAnalysis out;
  out.n = c.n();
  out.k = c.k();
  out.q = c.q();

  std::vector<std::uint64_t> steps;
  steps.reserve(c.n() * (c.q() - 1));
  for (std::size_t j = 0; j < c.n(); ++j) {
    for (unsigned b = 1; b < c.q(); ++b) steps.push_back(idx.column(j, static_cast<Elem>(b)));
  }

  auto& lw = out.leader_weight;
  lw.assign(size, kUnseen);
  lw[0] = 0;
  std::vector<std::uint64_t> frontier{0};
  std::vector<std::uint64_t> next;
  std::uint8_t depth = 0;
  out.coset_counts.push_back(1);
  while (!frontier.empty()) {
    next.clear();
    if (depth == kUnseen - 1) throw Error(ErrorKind::TooLarge, "covering radius exceeds 254");
    for (std::uint64_t s : frontier) {
      for (std::uint64_t e : steps) {
        const std::uint64_t t = idx.add(s, e);
        if (lw[t] == kUnseen) {
          lw[t] = static_cast<std::uint8_t>(depth + 1);
          next.push_back(t);
        }
      }
    }
    if (next.empty()) break;
    ++depth;
    out.coset_counts.push_back(next.size());
    frontier.swap(next);
  }
  out.rho = depth;

  out.profiles.resize(size);
  for (std::uint64_t s = 0; s < size; ++s) {
    StepProfile p;
    const int here = lw[s];
    for (std::uint64_t e : steps) {
      const int there = lw[idx.add(s, e)];
      if (there < here) {
        ++p.down;
      } else if (there == here) {
        ++p.level;
      } else {
        ++p.up;
      }
    }
    out.profiles[s] = p;
  }
  return out;
}

CRReport verify_completely_regular(const CosetAnalysis& analysis) {
  return assemble(analysis.rho, analysis.leader_weight, analysis.profiles, analysis.coset_counts);
}

CRReport verify_completely_regular(const LinearCode& c, const Budget& budget) {
  return verify_completely_regular(analyze_cosets(c, budget));
}

CRReport verify_cr_bruteforce(const LinearCode& c, const Budget& budget) {
  const std::uint64_t size = saturating_pow(c.q(), c.n());
  if (size > budget.bruteforce) {
    throw Error(ErrorKind::TooLarge, std::to_string(c.q()) + "^" + std::to_string(c.n()) +
                                         " vectors exceed brute-force budget " + std::to_string(budget.bruteforce));
  }
  const std::size_t n = c.n();
  const unsigned q = c.q();
  std::vector<std::uint64_t> place(n);
  for (std::size_t j = 0; j < n; ++j) place[j] = saturating_pow(q, j);
  auto digit = [&](std::uint64_t x, std::size_t j) { return static_cast<unsigned>((x / place[j]) % q); };

  std::vector<std::uint8_t> dist(size, kUnseen);
  std::vector<std::uint64_t> frontier;
  // The codeword budget is irrelevant here: q^k <= q^n already fits.
  for_each_codeword(c, Budget::uniform(size), [&](std::span<const Elem> w) {
    std::uint64_t x = 0;
    for (std::size_t j = 0; j < n; ++j) x += w[j] * place[j];
    dist[x] = 0;
    frontier.push_back(x);
  });
  const std::uint64_t code_size = frontier.size();

  auto for_each_neighbour = [&](std::uint64_t x, auto&& f) {
    for (std::size_t j = 0; j < n; ++j) {
      const unsigned v = digit(x, j);
      const std::uint64_t base = x - v * place[j];
      for (unsigned u = 0; u < q; ++u) {
        if (u != v) f(base + u * place[j]);
      }
    }
  };

  std::vector<std::uint64_t> counts{code_size};
  std::vector<std::uint64_t> next;
  std::uint8_t depth = 0;
  while (true) {
    next.clear();
    for (std::uint64_t x : frontier) {
      for_each_neighbour(x, [&](std::uint64_t y) {
        if (dist[y] == kUnseen) {
          dist[y] = static_cast<std::uint8_t>(depth + 1);
          next.push_back(y);
        }
      });
    }
    if (next.empty()) break;
    ++depth;
    counts.push_back(next.size());
    frontier.swap(next);
  }

  std::vector<StepProfile> profiles(size);
  for (std::uint64_t x = 0; x < size; ++x) {
    StepProfile p;
    const int here = dist[x];
    for_each_neighbour(x, [&](std::uint64_t y) {
      const int there = dist[y];
      if (there < here) {
        ++p.down;
      } else if (there == here) {
        ++p.level;
      } else {
        ++p.up;
      }
    });
    profiles[x] = p;
  }
  for (auto& cnt : counts) cnt /= code_size;
  return assemble(depth, dist, profiles, std::move(counts));
}

std::vector<std::uint64_t> coset_weight_slice(const LinearCode& c, std::size_t w, const Budget& budget) {
  const std::uint64_t size = saturating_pow(c.q(), c.redundancy());
  if (size > budget.syndromes) throw Error(ErrorKind::TooLarge, "syndrome space exceeds budget");
  SyndromeIndexer idx(c);
  std::vector<std::uint64_t> slice(size, 0);
  for_each_vector_of_weight(c.n(), c.q(), w, budget.codewords,
                            [&](std::span<const std::size_t> pos, std::span<const Elem> val) {
                              std::uint64_t s = 0;
                              for (std::size_t i = 0; i < pos.size(); ++i) s = idx.add(s, idx.column(pos[i], val[i]));
                              ++slice[s];
                            });
  return slice;
}

std::optional<UniformPacking> uniformly_packed_params(const LinearCode& c, const CosetAnalysis& analysis,
                                                      std::size_t min_dist, const Budget& budget) {
  const std::size_t e = (min_dist - 1) / 2;
  if (analysis.rho != e + 1) {
    throw Error(ErrorKind::NotQuasiPerfect,
                "covering radius " + std::to_string(analysis.rho) + " is not e + 1 = " + std::to_string(e + 1));
  }
  const auto slice = coset_weight_slice(c, e + 1, budget);
  std::optional<std::uint64_t> lambda;
  std::optional<std::uint64_t> mu;
  for (std::uint64_t s = 0; s < slice.size(); ++s) {
    const std::size_t l = analysis.leader_weight[s];
    auto& slot = l == e ? lambda : (l == e + 1 ? mu : lambda);
    if (l != e && l != e + 1) continue;
    if (!slot) {
      slot = slice[s];
    } else if (*slot != slice[s]) {
      return std::nullopt;
    }
  }
  return UniformPacking{lambda.value_or(0), mu.value_or(0)};
}

std::optional<UniformPacking> uniformly_packed_params(const LinearCode& c, const Budget& budget) {
  const auto analysis = analyze_cosets(c, budget);
  return uniformly_packed_params(c, analysis, min_distance(c, budget), budget);
}

}  // namespace crcodes
