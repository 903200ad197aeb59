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

#include "crcodes/reproduce.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>

#include "crcodes/analysis.hpp"
#include "crcodes/error.hpp"

namespace crcodes {

namespace {

// Thrown inside a row body to report a failed expectation.
struct RowFailure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw RowFailure{what};
}

std::string str(const IntersectionArray& ia) { return ia.to_string(); }

std::string counts_str(const std::vector<std::uint64_t>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

class Runner {
 public:
  explicit Runner(const Budget& budget) : budget_(budget) {}

  void row(int criterion, std::string name, const std::function<std::string()>& body) {
    ReproRow r;
    r.criterion = criterion;
    r.name = std::move(name);
    const auto start = std::chrono::steady_clock::now();
    try {
      r.detail = body();
      r.status = RowStatus::Pass;
    } catch (const RowFailure& f) {
      r.status = RowStatus::Fail;
      r.detail = f.what;
    } catch (const Error& e) {
      r.status = e.kind() == ErrorKind::TooLarge ? RowStatus::SkippedBudget : RowStatus::Fail;
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rows_.push_back(std::move(r));
  }

  const Budget& budget() const { return budget_; }
  std::vector<ReproRow> take() { return std::move(rows_); }

 private:
  Budget budget_;
  std::vector<ReproRow> rows_;
};

// Completely regular with the given array; returns the report.
CRReport expect_cr(const LinearCode& c, const IntersectionArray& want, const Budget& b) {
  auto rep = verify_completely_regular(c, b);
  expect(rep.is_cr, "not completely regular");
  expect(*rep.ia == want, "IA " + str(*rep.ia) + " != " + str(want));
  return rep;
}

void expect_params(const LinearCode& c, std::size_t n, std::size_t k, std::size_t d, std::size_t rho, const Budget& b) {
  const auto an = analyze_cosets(c, b);
  const std::size_t dist = min_distance(c, b);
  std::ostringstream os;
  os << "[" << c.n() << "," << c.k() << "," << dist << ";" << an.rho << "] expected [" << n << "," << k << "," << d
     << ";" << rho << "]";
  expect(c.n() == n && c.k() == k && dist == d && an.rho == rho, os.str());
}

}  // namespace

std::string_view to_string(RowStatus s) noexcept {
  switch (s) {
    case RowStatus::Pass: return "PASS";
    case RowStatus::Fail: return "FAIL";
    case RowStatus::SkippedBudget: return "SKIPPED(budget)";
  }
  return "?";
}

std::vector<ReproRow> run_reproduce(const Budget& budget) {
  Runner run(budget);
  const Budget& b = run.budget();

  // 1. Construction I, binary, k = 3.
  run.row(1, "I(2,3,1) is the [7,4,3;1] Hamming code", [&] {
    const auto c = construction_I(2, 3, 1);
    expect_params(c, 7, 4, 3, 1, b);
    expect(c.same_code(LinearCode::from_parity(cyclic_hamming(2, 3))), "differs from the cyclic Hamming code");
    return std::string("[7,4,3;1]");
  });
  for (unsigned c = 2; c <= 7; ++c) {
    run.row(1, "I(2,3," + std::to_string(c) + ") CR, rho = 2, IA formula", [&, c] {
      const FamilyParams p{Family::I, 2, 3, c};
      const auto rep = expect_cr(build_family(p), predicted_ia(p), b);
      expect(rep.rho == 2, "rho != 2");
      return str(*rep.ia);
    });
  }

  // 2. Non-binary instances.
  run.row(2, "I(3,3,2) = [26,20,3;2]_3, IA {52,26;1,2}", [&] {
    const FamilyParams p{Family::I, 3, 3, 2};
    const auto c = build_family(p);
    expect_params(c, 26, 20, 3, 2, b);
    expect(predicted_ia(p) == IntersectionArray{{52, 26}, {1, 2}}, "formula disagrees with {52,26;1,2}");
    return str(*expect_cr(c, predicted_ia(p), b).ia);
  });
  run.row(2, "I(4,2,2) = [10,6,3;2]_4, IA {30,15;1,2}", [&] {
    const FamilyParams p{Family::I, 4, 2, 2};
    const auto c = build_family(p);
    expect_params(c, 10, 6, 3, 2, b);
    expect(predicted_ia(p) == IntersectionArray{{30, 15}, {1, 2}}, "formula disagrees with {30,15;1,2}");
    return str(*expect_cr(c, predicted_ia(p), b).ia);
  });

  // 3. Dual spectra.
  run.row(3, "I(2,3,2) dual: 14 words of weight 4, 49 of weight 8", [&] {
    const FamilyParams p{Family::I, 2, 3, 2};
    const auto wd = dual_weight_distribution(build_family(p), b);
    expect(wd.nonzero_weights() == std::vector<std::size_t>{4, 8}, "dual weights are not {4, 8}");
    expect(wd[4] == 14 && wd[8] == 49, "dual counts " + wd[4].str() + ", " + wd[8].str());
    for (const auto& pw : predicted_dual_weights(p)) expect(wd[pw.weight] == *pw.count, "closed-form count mismatch");
    return std::string("A_4 = 14, A_8 = 49");
  });
  run.row(3, "II(2,3,6) dual: single weight 32; [63,57] Hamming", [&] {
    const auto c = construction_II(2, 3, 6);
    const auto wd = dual_weight_distribution(c, b);
    expect(wd.nonzero_weights() == std::vector<std::size_t>{32}, "dual has weights other than 32");
    expect_params(c, 63, 57, 3, 1, b);
    return std::string("A_32 = ") + wd[32].str();
  });

  // 4. Weight-3 counts.
  std::vector<FamilyParams> c3_instances;
  for (unsigned c = 2; c <= 7; ++c) c3_instances.push_back({Family::I, 2, 3, c});
  c3_instances.push_back({Family::I, 3, 3, 2});
  c3_instances.push_back({Family::I, 4, 2, 2});
  for (unsigned c = 1; c <= 5; ++c) c3_instances.push_back({Family::II, 2, 3, c});
  for (const auto& p : c3_instances) {
    const std::string name = std::string(to_string(p.family)) + "(" + std::to_string(p.q) + "," + std::to_string(p.k) +
                             "," + std::to_string(p.c) + ") |C_3| = closed form";
    run.row(4, name, [&, p] {
      const auto slice = coset_weight_slice(build_family(p), 3, b);
      const auto want = predicted_c3(p);
      expect(slice.front() == want, std::to_string(slice.front()) + " != " + std::to_string(want));
      return std::to_string(want);
    });
  }

  // 5. Construction II, binary, k = 3.
  for (unsigned c = 1; c <= 5; ++c) {
    run.row(5, "II(2,3," + std::to_string(c) + ") CR, IA formula", [&, c] {
      const FamilyParams p{Family::II, 2, 3, c};
      const auto rep = expect_cr(build_family(p), predicted_ia(p), b);
      expect(rep.rho == 2, "rho != 2");
      return str(*rep.ia);
    });
  }

  // 6. Extended family II.
  run.row(6, "extend(II(2,3,2)) = [36,29,4;3], IA, coset counts, 2-(36,4,9)", [&] {
    const auto x = extend_code(construction_II(2, 3, 2));
    expect_params(x, 36, 29, 4, 3, b);
    const auto rep = expect_cr(x, predicted_ia_extended_II(3), b);
    expect(rep.coset_counts == predicted_coset_counts_extended_II(3), "coset counts " + counts_str(rep.coset_counts));
    const auto words = codewords_of_weight(x, 4, b);
    expect(words.size() == 945, "|C*_4| = " + std::to_string(words.size()));
    const auto lambda = verify_design(words, 2, b);
    expect(lambda && *lambda == 9, "C*_4 is not a 2-(36,4,9) design");
    return str(*rep.ia) + " " + counts_str(rep.coset_counts);
  });
  run.row(6, "extend(II(2,4,6)) = [136,127,4;3], IA", [&] {
    const auto x = extend_code(construction_II(2, 4, 6));
    expect_params(x, 136, 127, 4, 3, b);
    const auto rep = expect_cr(x, predicted_ia_extended_II(4), b);
    expect(rep.coset_counts == predicted_coset_counts_extended_II(4), "coset counts " + counts_str(rep.coset_counts));
    return str(*rep.ia);
  });

  // 7. Extensions of family I.
  for (unsigned c = 2; c <= 4; ++c) {
    run.row(7, "extend(I(2,3," + std::to_string(c) + ")) is not CR", [&, c] {
      const auto rep = verify_completely_regular(extend_code(construction_I(2, 3, c)), b);
      expect(!rep.is_cr, "unexpectedly completely regular");
      return std::string("not CR");
    });
  }
  run.row(7, "extend(I(2,3,5)) is CR with the extended family-II array", [&] {
    const auto rep = expect_cr(extend_code(construction_I(2, 3, 5)), predicted_ia_extended_II(3), b);
    return str(*rep.ia);
  });
  run.row(7, "extend(I(2,4,c)): CR only at c = 9, with the k = 4 array", [&] {
    for (unsigned c = 2; c <= 8; ++c) {
      expect(!verify_completely_regular(extend_code(construction_I(2, 4, c)), b).is_cr,
             "c = " + std::to_string(c) + " unexpectedly completely regular");
    }
    const auto rep = expect_cr(extend_code(construction_I(2, 4, 9)), predicted_ia_extended_II(4), b);
    return str(*rep.ia);
  });

  // 8. Sporadic codes.
  run.row(8, "sporadic 1 = [15,9,3;3], IA {15,12,1;1,4,15}", [&] {
    const auto c = sporadic_code(SporadicId::Item1);
    expect_params(c, 15, 9, 3, 3, b);
    return str(*expect_cr(c, {{15, 12, 1}, {1, 4, 15}}, b).ia);
  });
  run.row(8, "sporadic 1x = [16,9,4;4], IA {16,15,12,1;1,4,15,16}", [&] {
    const auto c = sporadic_code(SporadicId::Item1Extended);
    expect_params(c, 16, 9, 4, 4, b);
    return str(*expect_cr(c, {{16, 15, 12, 1}, {1, 4, 15, 16}}, b).ia);
  });
  run.row(8, "sporadic 2 = [18,12,3;2], IA {18,15;1,6}", [&] {
    expect(difference_matrix_check(difference_matrix_2_3()), "D(2,3) is not a difference matrix");
    const auto c = sporadic_code(SporadicId::Item2);
    expect_params(c, 18, 12, 3, 2, b);
    return str(*expect_cr(c, {{18, 15}, {1, 6}}, b).ia);
  });
  run.row(8, "sporadic 3 = [15,9,3;3], IA {15,12,1;1,4,15}; set equality with item 1", [&] {
    const auto c = sporadic_code(SporadicId::Item3);
    expect(rank(c.parity()) == 6 && c.parity().rows() == 12, "parity matrix is not 12 x 15 of rank 6");
    expect_params(c, 15, 9, 3, 3, b);
    const auto rep = expect_cr(c, {{15, 12, 1}, {1, 4, 15}}, b);
    const auto item1 = sporadic_code(SporadicId::Item1);
    if (c.same_code(item1)) return str(*rep.ia) + ", identical to item 1";
    const bool equivalent = find_block_equivalence(c, item1, 3).has_value();
    return str(*rep.ia) + ", not set-equal to item 1; " +
           (equivalent ? "equal after permuting and rotating 3-column blocks" : "no block equivalence found");
  });

  // 9. Oracle equivalence.
  const std::vector<std::pair<std::string, std::function<LinearCode()>>> small = {
      {"[3,2] even weight", [] { return LinearCode::from_parity(GFMatrix(Field::make(2, 1), {{1, 1, 1}})); }},
      {"[7,4] Hamming", [] { return construction_I(2, 3, 1); }},
      {"I(2,3,2) [14,8]", [] { return construction_I(2, 3, 2); }},
      {"extend(I(2,3,2)) [15,8]", [] { return extend_code(construction_I(2, 3, 2)); }},
      {"sporadic 1 [15,9]", [] { return sporadic_code(SporadicId::Item1); }},
      {"sporadic 3 [15,9]", [] { return sporadic_code(SporadicId::Item3); }},
      {"sporadic 1x [16,9]", [] { return sporadic_code(SporadicId::Item1Extended); }},
      {"sporadic 2 [18,12]", [] { return sporadic_code(SporadicId::Item2); }},
      {"I(4,2,2) [10,6]_4", [] { return construction_I(4, 2, 2); }},
  };
  for (const auto& [label, make] : small) {
    run.row(9, "coset path = brute force on " + label, [&, make] {
      const auto c = make();
      const auto fast = verify_completely_regular(c, b);
      const auto slow = verify_cr_bruteforce(c, b);
      expect(fast == slow, "reports differ");
      return fast.is_cr ? "CR " + str(*fast.ia) : std::string("not CR");
    });
  }

  // 10. Invariants.
  std::vector<std::pair<std::string, std::function<LinearCode()>>> suite = {
      {"I(2,3,2)", [] { return construction_I(2, 3, 2); }},
      {"I(3,3,2)", [] { return construction_I(3, 3, 2); }},
      {"II(2,3,1)", [] { return construction_II(2, 3, 1); }},
      {"extend(I(2,3,3))", [] { return extend_code(construction_I(2, 3, 3)); }},
      {"extend(II(2,3,2))", [] { return extend_code(construction_II(2, 3, 2)); }},
      {"sporadic 1", [] { return sporadic_code(SporadicId::Item1); }},
      {"sporadic 1x", [] { return sporadic_code(SporadicId::Item1Extended); }},
      {"sporadic 2", [] { return sporadic_code(SporadicId::Item2); }},
  };
  for (const auto& [label, make] : suite) {
    run.row(10, "invariants on " + label, [&, make] {
      const auto c = make();
      const auto an = analyze_cosets(c, b);
      const auto rep = verify_completely_regular(an);
      const auto dual = dual_weight_distribution(c, b);
      const std::size_t s = dual.nonzero_weights().size();
      expect(rep.rho <= s, "rho > s");
      const std::size_t d = min_distance(c, b);
      const std::size_t e = (d - 1) / 2;
      if (rep.is_cr) {
        expect(rep.rho == s, "rho != s for a CR code");
        for (std::size_t i = 0; i < rep.rho; ++i) {
          expect(BigCount(rep.ia->b[i]) * rep.coset_counts[i] == BigCount(rep.ia->c[i]) * rep.coset_counts[i + 1],
                 "b_i|C(i)| != c_{i+1}|C(i+1)|");
        }
        for (std::size_t l = 0; l <= rep.rho; ++l) {
          const auto a = rep.ia->a(l, an.valency());
          const auto bl = l < rep.rho ? rep.ia->b[l] : 0;
          const auto cl = l ? rep.ia->c[l - 1] : 0;
          expect(a + bl + cl == an.valency(), "a + b + c != (q-1)n");
        }
      }
      for (const auto& p : an.profiles) expect(p.down + p.level + p.up == an.valency(), "profile does not sum to (q-1)n");
      if (rep.rho == e + 1) {
        const auto up = uniformly_packed_params(c, an, d, b);
        expect(up.has_value() == (s == e + 1), "uniformly packed iff s = e + 1 violated");
      } else {
        expect(s != e + 1, "s = e + 1 but not quasi-perfect");
      }
      const auto wd = weight_distribution_any(c, b);
      expect(macwilliams(dual, c.n(), c.n() - c.k(), c.q()) == wd, "MacWilliams image of the dual differs");
      expect(macwilliams(wd, c.n(), c.k(), c.q()) == dual, "MacWilliams round trip failed");
      return std::string(rep.is_cr ? "CR" : "not CR") + ", rho = " + std::to_string(rep.rho) + ", s = " + std::to_string(s);
    });
  }
  run.row(10, "extension identities: II(2,3,2) and sporadic 1", [&] {
    const auto c = construction_II(2, 3, 2);
    expect(check_estesos(c, extend_code(c), b), "identities fail for II(2,3,2)");
    const auto s = sporadic_code(SporadicId::Item1);
    expect(check_estesos(s, sporadic_code(SporadicId::Item1Extended), b), "identities fail for sporadic 1");
    return std::string("hold");
  });
  run.row(10, "no shift fixes a vector whose weight is coprime to n (1000 samples)", [&] {
    std::mt19937_64 rng(20161);
    const auto gf = Field::make(3, 1);
    int checked = 0;
    while (checked < 1000) {
      const std::size_t n = 2 + rng() % 40;
      const std::size_t w = 1 + rng() % n;
      if (std::gcd(n, w) != 1 || w == n) continue;
      std::vector<Elem> x(n, 0);
      std::vector<std::size_t> idx(n);
      std::iota(idx.begin(), idx.end(), 0);
      std::shuffle(idx.begin(), idx.end(), rng);
      for (std::size_t i = 0; i < w; ++i) x[idx[i]] = static_cast<Elem>(1 + rng() % 2);
      const GFVector v(gf, x);
      for (std::size_t i = 1; i < n; ++i) expect(!(cyclic_shift(v, static_cast<long long>(i)) == v), "shift fixed a vector");
      ++checked;
    }
    return std::string("1000 vectors");
  });

  return run.take();
}

bool all_passed(const std::vector<ReproRow>& rows) noexcept {
  for (const auto& r : rows) {
    if (r.status != RowStatus::Pass) return false;
  }
  return true;
}

nlohmann::json to_json(const std::vector<ReproRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    out.push_back({{"criterion", r.criterion},
                   {"name", r.name},
                   {"status", std::string(to_string(r.status))},
                   {"detail", r.detail}});
  }
  return {{"schema", 1}, {"all_passed", all_passed(rows)}, {"rows", out}};
}

std::string format_table(const std::vector<ReproRow>& rows) {
  std::ostringstream os;
  for (const auto& r : rows) {
    os << std::setw(2) << r.criterion << "  " << std::left << std::setw(16) << to_string(r.status) << std::right << r.name;
    if (!r.detail.empty()) os << "  [" << r.detail << "]";
    os << '\n';
  }
  return os.str();
}

}  // namespace crcodes
