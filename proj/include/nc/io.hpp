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

/**
 * @file
 * File formats and argument plumbing used by the `nc` command-line tool.
 *
 * State files hold exactly one of two payloads:
 *
 *     { "n": 3, "spectrum": [0.7, 0.2, 0.1] }
 *     { "n": 2, "matrix_re": [[...]], "matrix_im": [[...]] }
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nc/core_types.hpp"
#include "nc/distance.hpp"
#include "nc/geometry.hpp"
#include "nc/sw_kernel.hpp"

namespace nc::io {

using Json = nlohmann::ordered_json;

struct StateInput {
    std::size_t n = 0;
    std::optional<std::vector<double>> spectrum;
    std::optional<HermitianMatrix> matrix;

    /// Ordered spectrum of either payload.
    [[nodiscard]] Spectrum to_spectrum() const;
    /// The density matrix; diag(spectrum) for the spectrum payload.
    [[nodiscard]] HermitianMatrix to_matrix() const;
};

/// Throws Error(InvalidArgument) on schema violations and the usual
/// NonHermitian / NotAState / DimensionMismatch on bad content.
[[nodiscard]] StateInput parse_state(const nlohmann::json &doc);
[[nodiscard]] StateInput load_state_file(const std::filesystem::path &path);

/// Kernel selection: exactly one of zeta, pi or seed.
struct KernelArgs {
    std::optional<std::size_t> n;
    std::optional<double> zeta;
    std::optional<std::vector<double>> pi;
    std::optional<std::uint64_t> seed;
};

[[nodiscard]] KernelSpectrum resolve_kernel(const KernelArgs &args);

/// Comma-separated reals; U+2212 is accepted as a minus sign.
[[nodiscard]] std::vector<double> parse_number_list(std::string_view text);

/// Shortest representation that round-trips, capped at 12 significant
/// digits. Negative zero prints as "0".
[[nodiscard]] std::string format_float(double v);

[[nodiscard]] Json kernel_json(const KernelSpectrum &kernel);
[[nodiscard]] Json polytope_json(const Polytope &poly);
[[nodiscard]] Json indicator_json(const IndicatorResult &result);

} // namespace nc::io
