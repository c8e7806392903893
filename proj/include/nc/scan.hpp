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
 * Grid scans of the qutrit chamber triangle producing region and distance
 * data for plotting.
 *
 * The grid is uniform over [0, sqrt3/2] x [0, 1/2] with `resolution` points
 * per axis; points outside the chamber are skipped. Rows are emitted with
 * xi8 as the outer (slow) index, both ascending. Output is the CSV text
 *
 *     xi3,xi8,region,distance
 *
 * and is byte-identical for the parallel and serial kernels and for any
 * worker count.
 */

#pragma once

#include <cstddef>
#include <string>

#include "nc/core_types.hpp"

namespace nc {

struct ScanOptions {
    double zeta = 0.0;
    std::size_t resolution = 200;
    MetricConvention convention = MetricConvention::Paper;
};

/// Throws ModuliOutOfRange or InvalidArgument (resolution outside
/// [2, 10^4]).
[[nodiscard]] std::string scan_csv(const ScanOptions &options);

[[nodiscard]] std::string scan_csv_serial(const ScanOptions &options);

} // namespace nc
