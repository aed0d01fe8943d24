// Copyright 2026 The hadamard6 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hadamard6 {

/// Failure categories raised by the library. The CLI prints the name of the
/// kind on stderr and exits with status 1.
enum class ErrorKind {
  NearZeroEntry,
  DimensionMismatch,
  NotHadamard,
  ParamOutOfRange,
  InadmissibleSigns,
  SingularZ,
  OrderUnsupported,
  MaxIterExceeded,
  UnknownFamily,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NearZeroEntry: return "NearZeroEntry";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotHadamard: return "NotHadamard";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::InadmissibleSigns: return "InadmissibleSigns";
    case ErrorKind::SingularZ: return "SingularZ";
    case ErrorKind::OrderUnsupported: return "OrderUnsupported";
    case ErrorKind::MaxIterExceeded: return "MaxIterExceeded";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return to_string(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace hadamard6
