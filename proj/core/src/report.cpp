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

#include "crcodes/report.hpp"

#include <chrono>
#include <sstream>

#include "crcodes/error.hpp"

namespace crcodes {

namespace {

std::string big_to_string(const BigCount& v) { return v.str(); }

nlohmann::json big_to_json(const BigCount& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return big_to_string(v);
}

// Literal arrays of the sporadic codes.
std::optional<IntersectionArray> sporadic_ia(const std::string& family) {
  if (family == "sporadic1" || family == "sporadic3") return IntersectionArray{{15, 12, 1}, {1, 4, 15}};
  if (family == "sporadic1x") return IntersectionArray{{16, 15, 12, 1}, {1, 4, 15, 16}};
  if (family == "sporadic2") return IntersectionArray{{18, 15}, {1, 6}};
  return std::nullopt;
}

template <class T>
void expect_equal(Report& r, const std::string& what, const T& got, const T& want) {
  if (!(got == want)) r.mismatches.push_back("MISMATCH " + what);
}

// The extension of family II with c = 2^{k-1} - 2, and of family I with
// c = 2^{k-1} + 1, are completely regular with the same array.
std::optional<unsigned> extended_family_k(const CodeDescriptor& d) {
  if (!d.extended || !d.params || d.params->q != 2) return std::nullopt;
  const unsigned k = d.params->k;
  if (k < 3) return std::nullopt;
  const unsigned half = 1u << (k - 1);
  if (d.params->family == Family::II && d.params->c == half - 2) return k;
  if (d.params->family == Family::I && d.params->c == half + 1) return k;
  return std::nullopt;
}

}  // namespace

CodeDocument make_document(const std::string& family, unsigned q, unsigned k, unsigned c, bool extended) {
  CodeDescriptor desc;
  desc.extended = extended;
  std::optional<LinearCode> code;
  if (family == "I" || family == "II") {
    FamilyParams p{family == "I" ? Family::I : Family::II, q, k, c};
    p.validate();
    desc.family = family;
    desc.params = p;
    code = build_family(p);
  } else {
    const SporadicId id = parse_sporadic_id(family);
    desc.family = std::string(to_string(id));
    code = sporadic_code(id);
  }
  if (extended) code = extend_code(*code);
  return {std::move(desc), std::move(*code)};
}

nlohmann::json to_json(const CodeDocument& doc) {
  const LinearCode& c = doc.code;
  nlohmann::json h = nlohmann::json::array();
  for (std::size_t r = 0; r < c.parity().rows(); ++r) {
    std::vector<unsigned> row(c.parity().row(r).begin(), c.parity().row(r).end());
    h.push_back(row);
  }
  nlohmann::json params = nlohmann::json::object();
  if (doc.descriptor.params) {
    params["q"] = doc.descriptor.params->q;
    params["k"] = doc.descriptor.params->k;
    params["c"] = doc.descriptor.params->c;
  }
  params["extended"] = doc.descriptor.extended;
  return {{"p", c.field()->p()}, {"m", c.field()->m()}, {"n", c.n()},       {"k", c.k()},
          {"H", std::move(h)},   {"family", doc.descriptor.family},          {"params", std::move(params)}};
}

CodeDocument document_from_json(const nlohmann::json& j) {
  try {
    const auto p = j.at("p").get<unsigned>();
    const auto m = j.at("m").get<unsigned>();
    const auto n = j.at("n").get<std::size_t>();
    const auto field = Field::make(p, m);
    GFMatrix h(field, 0, n);
    for (const auto& row : j.at("H")) {
      std::vector<Elem> values;
      for (const auto& v : row) {
        const auto x = v.get<unsigned>();
        if (x >= field->q()) throw Error(ErrorKind::ParseError, "H entry out of range");
        values.push_back(static_cast<Elem>(x));
      }
      h.append_row(values);
    }
    CodeDescriptor desc;
    desc.family = j.value("family", std::string("custom"));
    const auto params = j.value("params", nlohmann::json::object());
    desc.extended = params.value("extended", false);
    if ((desc.family == "I" || desc.family == "II") && params.contains("q")) {
      desc.params = FamilyParams{desc.family == "I" ? Family::I : Family::II, params.at("q").get<unsigned>(),
                                 params.at("k").get<unsigned>(), params.at("c").get<unsigned>()};
    }
    LinearCode code = LinearCode::from_parity(std::move(h));
    if (j.contains("k") && j.at("k").get<std::size_t>() != code.k()) {
      throw Error(ErrorKind::ParseError, "stored dimension does not match rank of H");
    }
    return {std::move(desc), std::move(code)};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

Report build_report(const CodeDocument& doc, const Budget& budget, bool with_timing) {
  const auto start = std::chrono::steady_clock::now();
  const LinearCode& code = doc.code;
  Report r;
  r.descriptor = doc.descriptor;
  r.n = code.n();
  r.k = code.k();

  const CosetAnalysis analysis = analyze_cosets(code, budget);
  r.cr = verify_completely_regular(analysis);
  r.d = min_distance(code, budget);
  r.e = (r.d - 1) / 2;

  const WeightDistribution dual = dual_weight_distribution(code, budget);
  for (std::size_t w : dual.nonzero_weights()) r.dual_weights.emplace_back(w, dual[w]);
  r.external_distance = r.dual_weights.size();

  try {
    r.c3_enumerated = coset_weight_slice(code, 3, budget).front();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TooLarge) throw;
  }

  // Closed forms for the family, where they apply.
  const auto& desc = doc.descriptor;
  if (desc.params && !desc.extended) {
    const FamilyParams& p = *desc.params;
    try {
      r.ia_predicted = predicted_ia(p);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::OutOfRange) throw;
    }
    try {
      r.dual_weights_predicted = predicted_dual_weights(p);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::OutOfRange) throw;
    }
    r.c3_predicted = predicted_c3(p);
  } else if (auto k = extended_family_k(desc)) {
    r.ia_predicted = predicted_ia_extended_II(*k);
    r.coset_counts_predicted = predicted_coset_counts_extended_II(*k);
  } else if (!desc.params) {
    r.ia_predicted = sporadic_ia(desc.family);
  }

  if (r.ia_predicted) {
    if (!r.cr.is_cr) {
      r.mismatches.push_back("MISMATCH ia: predicted " + r.ia_predicted->to_string() + ", code is not completely regular");
    } else {
      expect_equal(r, "ia: enumerated " + r.cr.ia->to_string() + " vs predicted " + r.ia_predicted->to_string(),
                   *r.cr.ia, *r.ia_predicted);
    }
  }
  if (r.coset_counts_predicted) expect_equal(r, "coset_counts", r.cr.coset_counts, *r.coset_counts_predicted);
  if (r.c3_predicted && r.c3_enumerated) expect_equal(r, "c3", *r.c3_enumerated, *r.c3_predicted);
  if (r.dual_weights_predicted) {
    std::vector<std::size_t> got;
    for (const auto& [w, cnt] : r.dual_weights) got.push_back(w);
    std::vector<std::size_t> want;
    for (const auto& pw : *r.dual_weights_predicted) want.push_back(pw.weight);
    expect_equal(r, "dual_weights", got, want);
    if (got == want) {
      for (std::size_t i = 0; i < want.size(); ++i) {
        const auto& pw = (*r.dual_weights_predicted)[i];
        if (pw.count && r.dual_weights[i].second != *pw.count) {
          r.mismatches.push_back("MISMATCH dual weight count at " + std::to_string(pw.weight));
        }
      }
    }
  }

  // General invariants.
  if (r.cr.rho > r.external_distance) r.mismatches.push_back("MISMATCH rho <= s violated");
  if (r.cr.is_cr) {
    if (r.cr.rho != r.external_distance) r.mismatches.push_back("MISMATCH rho = s violated for a completely regular code");
    const auto& ia = *r.cr.ia;
    for (std::size_t i = 0; i < r.cr.rho; ++i) {
      if (BigCount(ia.b[i]) * r.cr.coset_counts[i] != BigCount(ia.c[i]) * r.cr.coset_counts[i + 1]) {
        r.mismatches.push_back("MISMATCH b_i|C(i)| = c_{i+1}|C(i+1)| at i = " + std::to_string(i));
      }
    }
  }

  r.quasi_perfect = r.cr.rho == r.e + 1;
  if (r.quasi_perfect) {
    r.up_params = uniformly_packed_params(code, analysis, r.d, budget);
    if (r.up_params.has_value() != (r.external_distance == r.e + 1)) {
      r.mismatches.push_back("MISMATCH uniformly packed iff s = e + 1");
    }
  }

  // Minimum-weight words form an e- (odd d) or (e+1)- (even d) design when the
  // code is completely regular; also record the replication number.
  if (r.cr.is_cr) {
    const std::size_t t = r.d % 2 ? r.e : r.e + 1;
    try {
      const auto words = codewords_of_weight(code, r.d, budget);
      for (std::size_t tt : {std::size_t{1}, t}) {
        if (tt == 0 || tt > r.d) continue;
        DesignCheck dc;
        dc.weight = r.d;
        dc.t = tt;
        dc.words = words.size();
        dc.lambda = verify_design(words, tt, budget);
        if (!dc.lambda) r.mismatches.push_back("MISMATCH C_" + std::to_string(r.d) + " is not a " + std::to_string(tt) + "-design");
        if (tt == 1 && dc.lambda) {
          const BigCount lhs = BigCount(r.d) * words.size();
          const BigCount rhs = BigCount(code.q() - 1) * code.n() * *dc.lambda;
          if (lhs != rhs) r.mismatches.push_back("MISMATCH w|C_w| = (q-1) n r");
        }
        if (auto k = extended_family_k(desc); k && tt == 2 && r.d == 4) {
          // lambda = (2^{2k-2} - 1)(2^k - 1)(2^{k-2} + 1) / (N - 1).
          const std::uint64_t h = std::uint64_t{1} << (*k - 1);
          const std::uint64_t big_n = h * (2 * h + 1);
          const std::uint64_t num = (h * h - 1) * (2 * h - 1) * (h / 2 + 1);
          if (num % (big_n - 1) == 0) dc.lambda_predicted = num / (big_n - 1);
          if (dc.lambda != dc.lambda_predicted) r.mismatches.push_back("MISMATCH 2-design lambda");
        }
        r.design_checks.push_back(dc);
        if (tt == t) break;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TooLarge) throw;
      DesignCheck dc;
      dc.weight = r.d;
      dc.t = t;
      dc.skipped = true;
      r.design_checks.push_back(dc);
    }
  }

  if (with_timing) {
    r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json j;
  j["schema"] = Report::kSchema;
  nlohmann::json code{{"family", r.descriptor.family}, {"n", r.n}, {"k", r.k}, {"d", r.d}, {"e", r.e}};
  nlohmann::json params = nlohmann::json::object();
  if (r.descriptor.params) {
    params["q"] = r.descriptor.params->q;
    params["k"] = r.descriptor.params->k;
    params["c"] = r.descriptor.params->c;
  }
  params["extended"] = r.descriptor.extended;
  code["params"] = params;
  j["code"] = code;
  j["rho"] = r.cr.rho;
  j["is_cr"] = r.cr.is_cr;
  j["cr"] = to_json(r.cr);
  auto ia_json = [](const std::optional<IntersectionArray>& ia) -> nlohmann::json {
    if (!ia) return nullptr;
    return {{"b", ia->b}, {"c", ia->c}};
  };
  j["ia"] = ia_json(r.cr.ia);
  j["ia_predicted"] = ia_json(r.ia_predicted);
  j["coset_counts"] = r.cr.coset_counts;
  j["coset_counts_predicted"] = r.coset_counts_predicted ? nlohmann::json(*r.coset_counts_predicted) : nlohmann::json(nullptr);
  j["external_distance"] = r.external_distance;
  nlohmann::json dw = nlohmann::json::array();
  for (const auto& [w, cnt] : r.dual_weights) dw.push_back({w, big_to_json(cnt)});
  j["dual_weights"] = dw;
  if (r.dual_weights_predicted) {
    nlohmann::json pw = nlohmann::json::array();
    for (const auto& p : *r.dual_weights_predicted) {
      pw.push_back({p.weight, p.count ? nlohmann::json(*p.count) : nlohmann::json(nullptr)});
    }
    j["dual_weights_predicted"] = pw;
  } else {
    j["dual_weights_predicted"] = nullptr;
  }
  j["c3_enumerated"] = r.c3_enumerated ? nlohmann::json(*r.c3_enumerated) : nlohmann::json(nullptr);
  j["c3_predicted"] = r.c3_predicted ? nlohmann::json(*r.c3_predicted) : nlohmann::json(nullptr);
  nlohmann::json dcs = nlohmann::json::array();
  for (const auto& dc : r.design_checks) {
    nlohmann::json x{{"w", dc.weight}, {"t", dc.t}, {"words", dc.words}, {"skipped", dc.skipped}};
    x["lambda"] = dc.lambda ? nlohmann::json(*dc.lambda) : nlohmann::json(nullptr);
    if (dc.lambda_predicted) x["lambda_predicted"] = *dc.lambda_predicted;
    dcs.push_back(x);
  }
  j["design_checks"] = dcs;
  j["quasi_perfect"] = r.quasi_perfect;
  j["up_params"] = r.up_params ? nlohmann::json{{"lambda", r.up_params->lambda}, {"mu", r.up_params->mu}}
                               : nlohmann::json(nullptr);
  j["mismatches"] = r.mismatches;
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
  return j;
}

int exit_code(const Report& r) {
  if (!r.mismatches.empty()) return 2;
  if (!r.cr.is_cr) return 1;
  return 0;
}

}  // namespace crcodes
