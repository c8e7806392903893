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

#include "nc/scan.hpp"

#include <cmath>
#include <vector>

#include <omp.h>

#include "nc/distance.hpp"
#include "nc/error.hpp"
#include "nc/io.hpp"
#include "nc/parallel.hpp"
#include "nc/sw_kernel.hpp"

namespace nc {

namespace {

constexpr const char *kHeader = "xi3,xi8,region,distance\n";

void check_options(const ScanOptions &opt) {
    check_zeta(opt.zeta);
    if (opt.resolution < 2 || opt.resolution > 10000) {
        throw Error(ErrorKind::InvalidArgument,
                    "resolution must lie in [2, 10000]");
    }
}

std::string scan_row(const ScanOptions &opt, std::size_t j) {
    const double last = static_cast<double>(opt.resolution - 1);
    const double xi8 = 0.5 * static_cast<double>(j) / last;
    const double xi3_max = std::sqrt(3.0) / 2.0;
    std::string out;
    for (std::size_t i = 0; i < opt.resolution; ++i) {
        const QutritChart c{xi3_max * static_cast<double>(i) / last, xi8};
        if (!c.in_chamber()) {
            // xi3 grows along the row, so nothing further is inside.
            break;
        }
        const IndicatorResult res = qutrit_distance(c, opt.zeta, opt.convention);
        out += io::format_float(c.xi3);
        out += ',';
        out += io::format_float(c.xi8);
        out += ',';
        out += to_string(*res.region);
        out += ',';
        out += io::format_float(res.distance());
        out += '\n';
    }
    return out;
}

} // namespace

std::string scan_csv(const ScanOptions &options) {
    check_options(options);
    std::vector<std::string> rows(options.resolution);
    const auto count = static_cast<long>(options.resolution);
#pragma omp parallel for num_threads(worker_count()) schedule(dynamic, 4)
    for (long j = 0; j < count; ++j) {
        rows[static_cast<std::size_t>(j)] =
            scan_row(options, static_cast<std::size_t>(j));
    }
    std::string out = kHeader;
    for (const std::string &row : rows) {
        out += row;
    }
    return out;
}

std::string scan_csv_serial(const ScanOptions &options) {
    check_options(options);
    std::string out = kHeader;
    for (std::size_t j = 0; j < options.resolution; ++j) {
        out += scan_row(options, j);
    }
    return out;
}

} // namespace nc
