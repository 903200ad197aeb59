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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "crcodes/error.hpp"
#include "crcodes/report.hpp"
#include "crcodes/reproduce.hpp"

namespace {

constexpr std::uint64_t kTinyBudget = 64;

crcodes::Budget parse_budget(const std::string& text) {
  if (text.empty() || text == "default") return crcodes::Budget::from_env();
  if (text == "tiny") return crcodes::Budget::uniform(kTinyBudget);
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || v == 0) throw CLI::ValidationError("--budget", "expected a positive integer, 'tiny' or 'default'");
  return crcodes::Budget::uniform(v);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw crcodes::Error(crcodes::ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

crcodes::CodeDocument load(const std::string& path) {
  const std::string text = slurp(path);
  auto j = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (!j.is_discarded()) return crcodes::document_from_json(j);
  crcodes::CodeDescriptor desc;
  desc.family = "custom";
  return {desc, crcodes::LinearCode::from_parity(crcodes::parse_matrix_text(text))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build concatenated Hamming-type codes and verify complete regularity by coset enumeration"};
  app.require_subcommand(1);

  std::string family = "I";
  unsigned q = 2;
  unsigned k = 3;
  unsigned c = 2;
  bool extend = false;
  std::string out_path;
  std::string format = "json";
  auto* construct = app.add_subcommand("construct", "Write the Code JSON document (or matrix text) of a code");
  construct->add_option("--family", family, "I, II, sporadic1, sporadic1x, sporadic2, sporadic3")->required();
  construct->add_option("--q", q, "Field order");
  construct->add_option("--k", k, "Hamming redundancy");
  construct->add_option("--c", c, "Block-count parameter");
  construct->add_flag("--extend", extend, "Append the overall parity coordinate");
  construct->add_option("--out", out_path, "Output path (stdout if omitted)");
  construct->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::string input;
  std::string budget_text;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Verify a code file and print the JSON report");
  verify->add_option("input", input, "Code JSON document or matrix text file")->required();
  verify->add_option("--budget", budget_text, "Enumeration budget: integer, 'tiny' or 'default'");
  verify->add_flag("--timing", timing, "Include wall-clock timing in the report");

  bool as_json = false;
  auto* reproduce = app.add_subcommand("reproduce", "Run every reference instance and print a PASS/FAIL table");
  reproduce->add_option("--budget", budget_text, "Enumeration budget: integer, 'tiny' or 'default'");
  reproduce->add_flag("--json", as_json, "Machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*construct) {
      const auto doc = crcodes::make_document(family, q, k, c, extend);
      std::string body = format == "json" ? crcodes::to_json(doc).dump(2) + "\n" : crcodes::to_text(doc.code.parity());
      if (out_path.empty()) {
        std::cout << body;
      } else {
        std::ofstream out(out_path);
        if (!out) {
          std::cerr << "error: cannot write " << out_path << "\n";
          return 1;
        }
        out << body;
      }
      return 0;
    }
    if (*verify) {
      const auto budget = parse_budget(budget_text);
      const auto report = crcodes::build_report(load(input), budget, timing);
      std::cout << crcodes::to_json(report).dump(2) << "\n";
      return crcodes::exit_code(report);
    }
    if (*reproduce) {
      const auto rows = crcodes::run_reproduce(parse_budget(budget_text));
      if (as_json) {
        std::cout << crcodes::to_json(rows).dump(2) << "\n";
      } else {
        std::cout << crcodes::format_table(rows);
      }
      return crcodes::all_passed(rows) ? 0 : 1;
    }
  } catch (const crcodes::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == crcodes::ErrorKind::TooLarge ? crcodes::kExitBudget : 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
