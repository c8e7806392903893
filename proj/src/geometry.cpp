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

#include "nc/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "nc/error.hpp"
#include "nc/wigner.hpp"

namespace nc {

namespace {

constexpr double kOnPlaneTol = 1e-12;
constexpr double kDistinctTol = 1e-9;
constexpr double kTieTol = 1e-12;
const double kSqrt3 = std::sqrt(3.0);

std::vector<double> chamber_vertex(std::size_t n, std::size_t k) {
    std::vector<double> v(n, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
        v[i] = 1.0 / static_cast<double>(k);
    }
    return v;
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

void push_distinct(std::vector<Spectrum> &out, std::vector<double> v) {
    for (const Spectrum &s : out) {
        if (euclidean_distance(s.values(), v) <= kDistinctTol) {
            return;
        }
    }
    out.emplace_back(Spectrum::snapped(std::move(v)));
}

// Unit normal of the cut line in the chart; the tangent points from Q to R.
struct LineFrame {
    double nx, ny, tx, ty;
};

LineFrame line_frame(double zeta) {
    const double theta = zeta + std::numbers::pi / 6.0;
    return {std::cos(theta), std::sin(theta), std::sin(theta),
            -std::cos(theta)};
}

} // namespace

double Halfspace::evaluate(std::span<const double> r) const {
    return dot(normal, r) - offset;
}

double Hyperplane::evaluate(const Spectrum &r) const {
    if (r.n() != normal.size()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "hyperplane and spectrum dimensions differ");
    }
    return dot(normal, r.values()) - offset;
}

std::string_view to_string(Region r) noexcept {
    switch (r) {
    case Region::OQR:
        return "OQR";
    case Region::AQT:
        return "AQT";
    case Region::QRST:
        return "QRST";
    case Region::BRS:
        return "BRS";
    }
    return "?";
}

Hyperplane hyperplane(const KernelSpectrum &kernel) {
    return {kernel.ascending(), 0.0};
}

std::vector<Halfspace> classical_halfspaces(const KernelSpectrum &kernel) {
    const std::size_t n = kernel.n();
    std::vector<Halfspace> hs;
    hs.reserve(n + 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<double> a(n, 0.0);
        a[i] = 1.0;
        a[i + 1] = -1.0;
        hs.push_back({std::move(a), 0.0});
    }
    std::vector<double> last(n, 0.0);
    last[n - 1] = 1.0;
    hs.push_back({std::move(last), 0.0});
    hs.push_back({kernel.ascending(), 0.0});
    return hs;
}

Polytope positivity_polytope(const KernelSpectrum &kernel) {
    const std::size_t n = kernel.n();
    const std::vector<double> a = kernel.ascending();

    std::vector<std::vector<double>> chamber(n + 1);
    std::vector<double> w(n + 1, 0.0);
    for (std::size_t k = 1; k <= n; ++k) {
        chamber[k] = chamber_vertex(n, k);
        w[k] = dot(a, chamber[k]);
    }

    Polytope poly;
    poly.n = n;
    poly.halfspaces = classical_halfspaces(kernel);

    for (std::size_t k = n; k >= 1; --k) {
        if (w[k] >= -kOnPlaneTol) {
            push_distinct(poly.vertices, chamber[k]);
        }
    }
    // A single halfspace cuts a simplex only along its edges, and every pair
    // of simplex vertices spans an edge.
    for (std::size_t i = n; i >= 1; --i) {
        for (std::size_t j = i - 1; j >= 1; --j) {
            const bool crosses = (w[i] > kOnPlaneTol && w[j] < -kOnPlaneTol) ||
                                 (w[i] < -kOnPlaneTol && w[j] > kOnPlaneTol);
            if (!crosses) {
                continue;
            }
            const double t = w[i] / (w[i] - w[j]);
            std::vector<double> v(n);
            for (std::size_t m = 0; m < n; ++m) {
                v[m] = chamber[i][m] + t * (chamber[j][m] - chamber[i][m]);
            }
            push_distinct(poly.vertices, std::move(v));
        }
    }
    return poly;
}

double absolute_radius(std::size_t n, MetricConvention convention) {
    if (n < 2) {
        throw Error(ErrorKind::InvalidArgument, "n must be at least 2");
    }
    const auto dn = static_cast<double>(n);
    if (convention == MetricConvention::Paper) {
        return std::sqrt(dn + 1.0) / (dn * dn - 1.0);
    }
    return 1.0 / std::sqrt(dn * (dn * dn - 1.0));
}

Spectrum tangent_spectrum(const KernelSpectrum &kernel) {
    const std::size_t n = kernel.n();
    const auto dn = static_cast<double>(n);
    const std::vector<double> a = kernel.ascending();
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = (dn - a[i]) / (dn * dn - 1.0);
    }
    return Spectrum(std::move(r));
}

QutritAnchors qutrit_anchor_points(double zeta) {
    zeta = check_zeta(zeta);
    const double sec_q = 1.0 / std::cos(zeta - std::numbers::pi / 3.0);
    const double sec_r = 1.0 / std::cos(zeta);
    QutritAnchors p;
    p.O = {0.0, 0.0};
    p.A = {0.0, 0.5};
    p.B = {kSqrt3 / 2.0, 0.5};
    p.Q = {0.0, 0.25 * sec_q};
    p.R = {kSqrt3 / 8.0 * sec_r, sec_r / 8.0};
    return p;
}

double line_projection(const QutritChart &c, double zeta) {
    const LineFrame f = line_frame(zeta);
    return c.xi3 * f.nx + c.xi8 * f.ny;
}

QutritChart line_foot(const QutritChart &c, double zeta) {
    const LineFrame f = line_frame(zeta);
    const double excess = c.xi3 * f.nx + c.xi8 * f.ny - 0.25;
    return {c.xi3 - excess * f.nx, c.xi8 - excess * f.ny};
}

Region classify_region(const QutritChart &c, double zeta) {
    zeta = check_zeta(zeta);
    if (!c.in_chamber()) {
        std::ostringstream os;
        os.precision(17);
        os << "chart point (" << c.xi3 << ", " << c.xi8
           << ") lies outside the chamber triangle";
        throw Error(ErrorKind::OutOfChamber, os.str());
    }
    const LineFrame f = line_frame(zeta);
    // w = 1/3 - (4/3) p, so the classicality slack on w maps to 3/4 of it on p.
    if (c.xi3 * f.nx + c.xi8 * f.ny <= 0.25 + 0.75 * kClassicalTol) {
        return Region::OQR;
    }
    const QutritAnchors anchors = qutrit_anchor_points(zeta);
    const double s = c.xi3 * f.tx + c.xi8 * f.ty;
    const double sq = anchors.Q.xi3 * f.tx + anchors.Q.xi8 * f.ty;
    const double sr = anchors.R.xi3 * f.tx + anchors.R.xi8 * f.ty;
    // Feet within rounding of Q or R resolve to the vertex region; the
    // distance formulas agree on those boundaries.
    if (s <= sq + kTieTol) {
        return Region::AQT;
    }
    if (s >= sr - kTieTol) {
        return Region::BRS;
    }
    return Region::QRST;
}

} // namespace nc
