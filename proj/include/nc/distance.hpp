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
 * Distance from a state to the set of Wigner-positive states.
 *
 * The classical set is invariant under unitary conjugation, so the nearest
 * classical state shares the eigenbasis of the input and the problem reduces
 * to projecting the ordered spectrum onto the positivity polytope. Three
 * routes are provided:
 *
 *  - `qutrit_distance`: closed form on the (xi3, xi8) chart, N = 3 only;
 *  - `project_to_classical`: Dykstra's alternating projections, any N;
 *  - `bruteforce_project`: active-set enumeration with KKT solves, N <= 8,
 *    kept as an independent oracle for the Dykstra projector.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nc/core_types.hpp"
#include "nc/geometry.hpp"
#include "nc/sw_kernel.hpp"

namespace nc {

struct IndicatorResult {
    double distance_paper = 0.0;
    double distance_frobenius = 0.0;
    MetricConvention convention = MetricConvention::Paper;
    /// Present only for N = 3.
    std::optional<Region> region;
    Spectrum nearest;
    /// Wigner floor of the input state.
    double floor = 0.0;
    bool classical = false;

    /// The distance in `convention`.
    [[nodiscard]] double distance() const noexcept {
        return convention == MetricConvention::Paper ? distance_paper
                                                     : distance_frobenius;
    }
};

[[nodiscard]] IndicatorResult
qutrit_distance(const QutritChart &c, double zeta,
                MetricConvention convention = MetricConvention::Paper);

struct ProjectionOptions {
    double tol = 1e-12;
    std::size_t max_cycles = 100000;
};

/// Iteration count and last step size of a Dykstra run.
struct ProjectionReport {
    std::size_t cycles = 0;
    double last_step = 0.0;
};

/// Euclidean projection of r onto {ordered simplex} ∩ {w >= 0}. Throws
/// NoConvergence when the cycle cap is reached with a constraint residual
/// above 10 tol.
[[nodiscard]] Spectrum project_to_classical(const Spectrum &r,
                                            const KernelSpectrum &kernel,
                                            const ProjectionOptions &options = {},
                                            ProjectionReport *report = nullptr);

[[nodiscard]] IndicatorResult
distance_general(const Spectrum &r, const KernelSpectrum &kernel,
                 MetricConvention convention = MetricConvention::Paper,
                 const ProjectionOptions &options = {});

/// Exact projection by enumerating active constraint sets (2^(N+1) KKT
/// solves). Throws InvalidArgument for N > 8.
[[nodiscard]] Spectrum bruteforce_project(const Spectrum &r,
                                          const KernelSpectrum &kernel);

/// distance_general over many spectra on OpenMP workers. Output order
/// matches input order.
[[nodiscard]] std::vector<IndicatorResult>
distance_batch(std::span<const Spectrum> states, const KernelSpectrum &kernel,
               MetricConvention convention = MetricConvention::Paper);

[[nodiscard]] std::vector<IndicatorResult>
distance_batch_serial(std::span<const Spectrum> states,
                      const KernelSpectrum &kernel,
                      MetricConvention convention = MetricConvention::Paper);

namespace detail {

/// Projection onto the non-increasing cone (pool adjacent violators).
void project_monotone(std::vector<double> &x);
/// Projection onto the probability simplex (sort-and-threshold).
void project_simplex(std::vector<double> &x);
/// Projection onto {a . x >= 0}.
void project_halfspace(std::vector<double> &x, std::span<const double> a);

} // namespace detail

} // namespace nc
