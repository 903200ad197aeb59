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
#include <vector>

#include <nlohmann/json.hpp>

#include "crcodes/analysis.hpp"

namespace crcodes {

// Which construction produced a code. `family` is one of "I", "II",
// "sporadic1", "sporadic1x", "sporadic2", "sporadic3", or "custom".
struct CodeDescriptor {
  std::string family;
  std::optional<FamilyParams> params;
  bool extended = false;
};

struct CodeDocument {
  CodeDescriptor descriptor;
  LinearCode code;
};

// Builds the code named by `family` (q, k, c are ignored for sporadic ids).
// Throws NotCyclic / BadC / UnknownId.
CodeDocument make_document(const std::string& family, unsigned q, unsigned k, unsigned c, bool extended = false);

// {"p", "m", "n", "k", "H", "family", "params"}.
nlohmann::json to_json(const CodeDocument& doc);
// Rebuilds the code from the stored H; throws ParseError on malformed input.
CodeDocument document_from_json(const nlohmann::json& j);

struct DesignCheck {
  std::size_t weight = 0;
  std::size_t t = 0;
  std::uint64_t words = 0;
  std::optional<std::uint64_t> lambda;
  std::optional<std::uint64_t> lambda_predicted;
  bool skipped = false;
};

struct Report {
  static constexpr int kSchema = 1;

  CodeDescriptor descriptor;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::size_t e = 0;
  CRReport cr;
  std::optional<IntersectionArray> ia_predicted;
  std::optional<std::vector<std::uint64_t>> coset_counts_predicted;
  std::size_t external_distance = 0;
  std::vector<std::pair<std::size_t, BigCount>> dual_weights;
  std::optional<std::vector<PredictedWeight>> dual_weights_predicted;
  std::optional<std::uint64_t> c3_enumerated;
  std::optional<std::uint64_t> c3_predicted;
  std::vector<DesignCheck> design_checks;
  std::optional<UniformPacking> up_params;
  bool quasi_perfect = false;
  std::vector<std::string> mismatches;
  std::optional<double> timing_ms;
};

// Runs every check on the code and compares it with the closed forms that
// apply to its family. Throws TooLarge if a required enumeration exceeds the
// budget; optional checks that do not fit are marked skipped instead.
Report build_report(const CodeDocument& doc, const Budget& budget = {}, bool with_timing = false);

nlohmann::json to_json(const Report& r);

// 0: completely regular and every prediction matched; 2: some prediction
// mismatched; 1: not completely regular.
int exit_code(const Report& r);

// Exit status for budget exhaustion.
inline constexpr int kExitBudget = 3;

}  // namespace crcodes
