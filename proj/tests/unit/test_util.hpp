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

#include <gtest/gtest.h>

#include "crcodes/error.hpp"

// Runs `stmt` and checks it throws crcodes::Error of the given kind.
#define EXPECT_CRCODES_ERROR(stmt, expected_kind)                                  \
  do {                                                                             \
    bool thrown_ = false;                                                          \
    try {                                                                          \
      stmt;                                                                        \
    } catch (const crcodes::Error& e_) {                                           \
      thrown_ = true;                                                              \
      EXPECT_EQ(e_.kind(), crcodes::ErrorKind::expected_kind) << e_.what();        \
    }                                                                              \
    EXPECT_TRUE(thrown_) << "expected " #expected_kind;                            \
  } while (0)
