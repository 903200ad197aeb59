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

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "crcodes/code.hpp"

namespace crcodes {

enum class RowStatus { Pass, Fail, SkippedBudget };

std::string_view to_string(RowStatus s) noexcept;

struct ReproRow {
  int criterion = 0;
  std::string name;
  RowStatus status = RowStatus::Fail;
  std::string detail;
  double seconds = 0.0;
};

// Rebuilds every family instance and sporadic code, verifies it by coset
// enumeration and compares against the closed forms. A row whose enumeration
// exceeds `budget` is reported as skipped rather than failed.
std::vector<ReproRow> run_reproduce(const Budget& budget = {});

bool all_passed(const std::vector<ReproRow>& rows) noexcept;
nlohmann::json to_json(const std::vector<ReproRow>& rows);
std::string format_table(const std::vector<ReproRow>& rows);

}  // namespace crcodes
