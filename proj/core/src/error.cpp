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

#include "crcodes/error.hpp"

namespace crcodes {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonPrimeP: return "NonPrimeP";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::InvOfZero: return "InvOfZero";
    case ErrorKind::ColumnMismatch: return "ColumnMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::EmptyCode: return "EmptyCode";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NonIntegerOutput: return "NonIntegerOutput";
    case ErrorKind::NotQuasiPerfect: return "NotQuasiPerfect";
    case ErrorKind::NotCyclic: return "NotCyclic";
    case ErrorKind::BadC: return "BadC";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::BadShape: return "BadShape";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::MixedWeights: return "MixedWeights";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::NotExtensionPair: return "NotExtensionPair";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace crcodes
