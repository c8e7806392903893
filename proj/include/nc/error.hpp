// Copyright 2026 The ncdist Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nc {

enum class ErrorKind {
    NonHermitian,
    NotAState,
    DimensionMismatch,
    OutOfChamber,
    ModuliOutOfRange,
    MasterEquationViolated,
    NoConvergence,
    InfeasibleModel,
    InvalidArgument,
};

[[nodiscard]] constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::NonHermitian:
        return "NonHermitian";
    case ErrorKind::NotAState:
        return "NotAState";
    case ErrorKind::DimensionMismatch:
        return "DimensionMismatch";
    case ErrorKind::OutOfChamber:
        return "OutOfChamber";
    case ErrorKind::ModuliOutOfRange:
        return "ModuliOutOfRange";
    case ErrorKind::MasterEquationViolated:
        return "MasterEquationViolated";
    case ErrorKind::NoConvergence:
        return "NoConvergence";
    case ErrorKind::InfeasibleModel:
        return "InfeasibleModel";
    case ErrorKind::InvalidArgument:
        return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library. The message is prefixed with the
/// kind name so that CLI users see e.g. "MasterEquationViolated: ...".
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
          kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace nc
