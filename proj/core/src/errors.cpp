// Copyright 2026 The unistego Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "unistego/errors.hpp"

namespace unistego {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::DuplicateSymbol: return "DuplicateSymbol";
    case ErrorKind::InvalidAlphabet: return "InvalidAlphabet";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NonPositive: return "NonPositive";
    case ErrorKind::InvalidDelta: return "InvalidDelta";
    case ErrorKind::PayloadOutOfRange: return "PayloadOutOfRange";
    case ErrorKind::InvalidBlockLength: return "InvalidBlockLength";
    case ErrorKind::InvalidModel: return "InvalidModel";
    case ErrorKind::SpaceTooLarge: return "SpaceTooLarge";
    case ErrorKind::DegenerateCells: return "DegenerateCells";
    case ErrorKind::EmptyTrace: return "EmptyTrace";
    case ErrorKind::Io: return "Io";
    case ErrorKind::Config: return "Config";
  }
  return "Unknown";
}

}  // namespace unistego
