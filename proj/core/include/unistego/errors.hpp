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

#ifndef UNISTEGO_ERRORS_HPP
#define UNISTEGO_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace unistego {

enum class ErrorKind {
  UnknownSymbol,
  DuplicateSymbol,
  InvalidAlphabet,
  IndexOutOfRange,
  NonPositive,
  InvalidDelta,
  PayloadOutOfRange,
  InvalidBlockLength,
  InvalidModel,
  SpaceTooLarge,
  DegenerateCells,
  EmptyTrace,
  Io,
  Config,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// front ends can map it to an exit status without parsing messages.
class StegoError : public std::runtime_error {
 public:
  StegoError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace unistego

#endif  // UNISTEGO_ERRORS_HPP
