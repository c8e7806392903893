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
 * Geometry of the Wigner-positive set inside the ordered eigenvalue simplex
 * (the Weyl chamber). The chamber has vertices v_k = (1/k, ..., 1/k, 0, ...),
 * k = 1..N, and a single hyperplane w(r) = 0 cuts the positivity polytope
 * out of it.
 *
 * For the qutrit the chamber is triangle O, A, B in the (xi3, xi8) chart and
 * the cut line meets edge OA at Q and edge OB at R.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "nc/core_types.hpp"
#include "nc/sw_kernel.hpp"

namespace nc {

/// normal . r >= offset
struct Halfspace {
    std::vector<double> normal;
    double offset = 0.0;

    [[nodiscard]] double evaluate(std::span<const double> r) const;
};

/// The separating hyperplane: normal is the kernel spectrum in ascending
/// order, offset is always 0. Its value on a spectrum is the Wigner floor.
struct Hyperplane {
    std::vector<double> normal;
    double offset = 0.0;

    [[nodiscard]] double evaluate(const Spectrum &r) const;
};

struct Polytope {
    std::size_t n = 0;
    std::vector<Spectrum> vertices;
    /// N-1 ordering constraints, r_N >= 0, then the positivity hyperplane.
    std::vector<Halfspace> halfspaces;
};

enum class Region { OQR, AQT, QRST, BRS };

[[nodiscard]] std::string_view to_string(Region r) noexcept;

struct QutritAnchors {
    QutritChart O, A, B, Q, R;
};

[[nodiscard]] Hyperplane hyperplane(const KernelSpectrum &kernel);

/// Halfspace form of the chamber plus w >= 0; shared with the projectors.
[[nodiscard]] std::vector<Halfspace>
classical_halfspaces(const KernelSpectrum &kernel);

/// Vertex form of chamber cut by w >= 0: surviving chamber vertices first
/// (barycenter first), then edge crossings.
[[nodiscard]] Polytope positivity_polytope(const KernelSpectrum &kernel);

/// sqrt(N+1)/(N^2-1) in the paper convention, 1/sqrt(N(N^2-1)) Frobenius.
[[nodiscard]] double absolute_radius(std::size_t n,
                                     MetricConvention convention);

/// (N - pi_N, ..., N - pi_1)/(N^2 - 1): where the hyperplane touches the
/// absolute-positivity ball.
[[nodiscard]] Spectrum tangent_spectrum(const KernelSpectrum &kernel);

[[nodiscard]] QutritAnchors qutrit_anchor_points(double zeta);

/// Signed position along the cut-line normal,
/// p = xi3 cos(zeta + pi/6) + xi8 sin(zeta + pi/6). Classical iff p <= 1/4.
[[nodiscard]] double line_projection(const QutritChart &c, double zeta);

/// Foot of the perpendicular from c onto the line p = 1/4.
[[nodiscard]] QutritChart line_foot(const QutritChart &c, double zeta);

/// Ties: p = 1/4 -> OQR, foot at Q -> AQT, foot at R -> BRS.
/// Throws OutOfChamber, ModuliOutOfRange.
[[nodiscard]] Region classify_region(const QutritChart &c, double zeta);

} // namespace nc
