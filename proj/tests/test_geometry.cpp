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

#include <catch_amalgamated.hpp>

#include <numbers>

#include "catch_helpers.hpp"
#include "nc/distance.hpp"
#include "nc/geometry.hpp"
#include "nc/wigner.hpp"
#include "test_support.hpp"

using Catch::Approx;
using namespace nc;
using nc::testing::require_kind;

namespace {

const double kSqrt3 = std::sqrt(3.0);

void require_chart(const QutritChart &c, double xi3, double xi8,
                   double tol = 1e-12) {
    INFO("chart (" << c.xi3 << ", " << c.xi8 << ") vs (" << xi3 << ", " << xi8
                   << ")");
    REQUIRE(std::abs(c.xi3 - xi3) <= tol);
    REQUIRE(std::abs(c.xi8 - xi8) <= tol);
}

std::vector<QutritChart> chart_vertices(const Polytope &p) {
    std::vector<QutritChart> out;
    for (const Spectrum &v : p.vertices) {
        out.push_back(chart_from_spectrum(v));
    }
    return out;
}

} // namespace

TEST_CASE("hyperplane", "[geometry]") {
    const Hyperplane h = hyperplane(qutrit_kernel(0.0));
    REQUIRE(h.offset == 0.0);
    REQUIRE(h.normal[0] == Approx(-1.0).margin(1e-15));
    REQUIRE(h.normal[1] == Approx(1.0).margin(1e-15));
    REQUIRE(h.normal[2] == Approx(1.0).margin(1e-15));
    REQUIRE(h.evaluate(Spectrum({0.7, 0.2, 0.1})) == Approx(-0.4).margin(1e-15));

    const KernelSpectrum k60({5.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0});
    REQUIRE(hyperplane(k60).evaluate(Spectrum({5.0 / 12.0, 5.0 / 12.0, 1.0 / 6.0})) ==
            Approx(0.0).margin(1e-15));

    Rng rng = make_rng(2);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 2 + static_cast<std::size_t>(i % 6);
        const KernelSpectrum k = random_kernel(n, static_cast<std::uint64_t>(i));
        const Spectrum r = testing::random_spectrum(n, rng);
        REQUIRE(hyperplane(k).evaluate(r) == wigner_floor(r, k));
    }
}

TEST_CASE("positivity_polytope qutrit examples", "[geometry]") {
    SECTION("zeta = pi/3: O, Q, R") {
        const Polytope p = positivity_polytope(qutrit_kernel(kZetaMax));
        REQUIRE(p.vertices.size() == 3);
        const auto c = chart_vertices(p);
        require_chart(c[0], 0.0, 0.0);
        require_chart(c[1], 0.0, 0.25);
        require_chart(c[2], kSqrt3 / 4.0, 0.25);
        REQUIRE(p.vertices[1][0] == Approx(5.0 / 12.0).margin(1e-12));
        REQUIRE(p.vertices[2][0] == Approx(2.0 / 3.0).margin(1e-12));
        REQUIRE(p.vertices[2][2] == Approx(1.0 / 6.0).margin(1e-12));
    }
    SECTION("zeta = 0: O, A (= Q), R") {
        const Polytope p = positivity_polytope(qutrit_kernel(0.0));
        REQUIRE(p.vertices.size() == 3);
        const auto c = chart_vertices(p);
        require_chart(c[0], 0.0, 0.0, 1e-10);
        require_chart(c[1], 0.0, 0.5, 1e-10);
        require_chart(c[2], kSqrt3 / 8.0, 0.125, 1e-10);
    }
    SECTION("qubit: segment from barycenter to the tangent state") {
        const Polytope p = positivity_polytope(random_kernel(2, 0));
        REQUIRE(p.vertices.size() == 2);
        REQUIRE(p.vertices[0][0] == Approx(0.5).margin(1e-12));
        REQUIRE(p.vertices[1][0] == Approx((3.0 + kSqrt3) / 6.0).margin(1e-12));
        REQUIRE(p.vertices[1][1] == Approx((3.0 - kSqrt3) / 6.0).margin(1e-12));
    }
}

TEST_CASE("positivity_polytope invariants", "[geometry]") {
    for (std::size_t n = 2; n <= 8; ++n) {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const KernelSpectrum k = random_kernel(n, seed);
            const Polytope p = positivity_polytope(k);
            REQUIRE(p.n == n);
            REQUIRE(p.halfspaces.size() == n + 1);
            REQUIRE(p.vertices.size() >= 2);
            // Barycenter comes first and is always kept.
            REQUIRE(p.vertices.front()[n - 1] ==
                    Approx(1.0 / static_cast<double>(n)).margin(1e-15));
            for (std::size_t a = 0; a < p.vertices.size(); ++a) {
                const Spectrum &v = p.vertices[a];
                for (const Halfspace &h : p.halfspaces) {
                    REQUIRE(h.evaluate(v.values()) >= -1e-10);
                }
                const double w = wigner_floor(v, k);
                bool chamber_vertex = true;
                for (std::size_t i = 0; i + 1 < n; ++i) {
                    const double gap = v[i] - v[i + 1];
                    chamber_vertex = chamber_vertex &&
                                     (gap < 1e-12 || std::abs(v[i + 1]) < 1e-12);
                }
                REQUIRE((std::abs(w) <= 1e-10 || (chamber_vertex && w > 0.0)));
                for (std::size_t b = a + 1; b < p.vertices.size(); ++b) {
                    REQUIRE(euclidean_distance(v.values(),
                                               p.vertices[b].values()) > 1e-9);
                }
            }
        }
    }
}

TEST_CASE("absolute_radius", "[geometry]") {
    REQUIRE(absolute_radius(3, MetricConvention::Paper) == Approx(0.25).margin(1e-15));
    REQUIRE(absolute_radius(2, MetricConvention::Paper) ==
            Approx(kSqrt3 / 3.0).margin(1e-15));
    REQUIRE(absolute_radius(3, MetricConvention::Frobenius) ==
            Approx(1.0 / std::sqrt(24.0)).margin(1e-15));
    for (std::size_t n = 2; n <= 12; ++n) {
        const auto dn = static_cast<double>(n);
        // Barycenter-to-hyperplane distance (1/N)/sqrt(N - 1/N).
        REQUIRE(absolute_radius(n, MetricConvention::Frobenius) ==
                Approx((1.0 / dn) / std::sqrt(dn - 1.0 / dn)).margin(1e-15));
        REQUIRE(absolute_radius(n, MetricConvention::Paper) ==
                Approx(metric_convert(absolute_radius(n, MetricConvention::Frobenius),
                                      n, MetricConvention::Frobenius,
                                      MetricConvention::Paper))
                    .margin(1e-15));
    }
}

TEST_CASE("tangent_spectrum", "[geometry]") {
    const Spectrum t0 = tangent_spectrum(qutrit_kernel(0.0));
    REQUIRE(t0[0] == Approx(0.5).margin(1e-15));
    REQUIRE(t0[1] == Approx(0.25).margin(1e-15));
    REQUIRE(t0[2] == Approx(0.25).margin(1e-15));

    const Spectrum t60 = tangent_spectrum(KernelSpectrum({5.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0}));
    REQUIRE(t60[0] == Approx(5.0 / 12.0).margin(1e-15));
    REQUIRE(t60[2] == Approx(1.0 / 6.0).margin(1e-15));

    const Spectrum tq = tangent_spectrum(random_kernel(2, 3));
    REQUIRE(tq[0] == Approx((3.0 + kSqrt3) / 6.0).margin(1e-15));
    REQUIRE(tq[1] == Approx((3.0 - kSqrt3) / 6.0).margin(1e-15));
    REQUIRE(tq[0] == Approx(0.788675).margin(1e-6));
    REQUIRE(wigner_floor(tq, random_kernel(2, 3)) == Approx(0.0).margin(1e-15));

    for (std::size_t n = 2; n <= 8; ++n) {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const KernelSpectrum k = random_kernel(n, seed);
            const Spectrum t = tangent_spectrum(k);
            REQUIRE(std::abs(wigner_floor(t, k)) <= 1e-12);
            const double d = euclidean_distance(
                t.values(), Spectrum::maximally_mixed(n).values());
            REQUIRE(std::abs(d - absolute_radius(n, MetricConvention::Frobenius)) <=
                    1e-12);
        }
    }
}

TEST_CASE("qutrit_anchor_points", "[geometry]") {
    const QutritAnchors z0 = qutrit_anchor_points(0.0);
    require_chart(z0.O, 0.0, 0.0, 0.0);
    require_chart(z0.A, 0.0, 0.5, 0.0);
    require_chart(z0.B, kSqrt3 / 2.0, 0.5, 0.0);
    require_chart(z0.Q, 0.0, 0.5, 1e-15);
    require_chart(z0.R, kSqrt3 / 8.0, 0.125, 1e-15);

    const QutritAnchors z60 = qutrit_anchor_points(std::numbers::pi / 3.0);
    require_chart(z60.Q, 0.0, 0.25, 1e-15);
    require_chart(z60.R, kSqrt3 / 4.0, 0.25, 1e-15);

    const QutritAnchors z30 = qutrit_anchor_points(std::numbers::pi / 6.0);
    require_chart(z30.Q, 0.0, 1.0 / (2.0 * kSqrt3), 1e-15);
    require_chart(z30.R, 0.25, 1.0 / (4.0 * kSqrt3), 1e-15);

    for (int i = 0; i <= 200; ++i) {
        const double zeta = kZetaMax * i / 200.0;
        const QutritAnchors p = qutrit_anchor_points(zeta);
        REQUIRE(std::abs(line_projection(p.Q, zeta) - 0.25) <= 1e-14);
        REQUIRE(std::abs(line_projection(p.R, zeta) - 0.25) <= 1e-14);
        REQUIRE(p.Q.xi3 == 0.0);                                  // edge OA
        REQUIRE(std::abs(p.R.xi8 - p.R.xi3 / kSqrt3) <= 1e-15); // edge OB
        // Q and R are exactly where the hyperplane meets the chamber edges.
        const Polytope poly = positivity_polytope(qutrit_kernel(zeta));
        const auto c = chart_vertices(poly);
        REQUIRE(c.size() == 3);
        require_chart(c[1], p.Q.xi3, p.Q.xi8, 1e-10);
        require_chart(c[2], p.R.xi3, p.R.xi8, 1e-10);
    }

    require_kind(ErrorKind::ModuliOutOfRange, [] { (void)qutrit_anchor_points(2.0); });
}

TEST_CASE("classify_region examples", "[geometry]") {
    for (double zeta : {0.0, 0.5, kZetaMax}) {
        REQUIRE(classify_region({0.0, 0.0}, zeta) == Region::OQR);
    }
    REQUIRE(classify_region({kSqrt3 / 2.0, 0.5}, std::numbers::pi / 6.0) ==
            Region::BRS);
    REQUIRE(classify_region({0.2, 0.4}, std::numbers::pi / 6.0) == Region::QRST);
    const QutritChart foot = line_foot({0.2, 0.4}, std::numbers::pi / 6.0);
    REQUIRE(foot.xi3 == Approx(0.1018).margin(1e-4));
    REQUIRE(foot.xi8 == Approx(0.2299).margin(1e-4));
    REQUIRE(classify_region({0.0, 0.5}, kZetaMax) == Region::AQT);

    require_kind(ErrorKind::OutOfChamber,
                 [] { (void)classify_region({0.5, 0.1}, 0.2); });
    require_kind(ErrorKind::ModuliOutOfRange,
                 [] { (void)classify_region({0.1, 0.1}, -1.0); });
}

TEST_CASE("classify_region tie-breaks", "[geometry]") {
    // Point on the cut line: classical.
    const QutritAnchors p = qutrit_anchor_points(kZetaMax);
    REQUIRE(classify_region(p.Q, kZetaMax) == Region::OQR);
    REQUIRE(classify_region(p.R, kZetaMax) == Region::OQR);
    // Beyond the line with the foot exactly at Q or R.
    REQUIRE(classify_region({0.0, 0.4}, kZetaMax) == Region::AQT);
    REQUIRE(classify_region({kSqrt3 / 4.0, 0.45}, kZetaMax) == Region::BRS);
}

TEST_CASE("region AQT is empty at zeta = 0", "[geometry]") {
    Rng rng = make_rng(0);
    for (int i = 0; i < 20000; ++i) {
        REQUIRE(classify_region(testing::random_chart(rng), 0.0) != Region::AQT);
    }
    // Along edge OA, the closest candidates.
    for (int i = 0; i <= 1000; ++i) {
        REQUIRE(classify_region({0.0, 0.5 * i / 1000.0}, 0.0) != Region::AQT);
        REQUIRE(classify_region({1e-9 * i, 0.5}, 0.0) != Region::AQT);
    }
}

TEST_CASE("classified region is classical exactly when the floor is",
          "[geometry]") {
    Rng rng = make_rng(19);
    for (int i = 0; i < 10000; ++i) {
        const QutritChart c = testing::random_chart(rng);
        const double zeta = testing::random_zeta(rng);
        const bool classical =
            is_classical(spectrum_from_chart(c), qutrit_kernel(zeta));
        REQUIRE((classify_region(c, zeta) == Region::OQR) == classical);
        if (line_projection(c, zeta) < 0.25) {
            REQUIRE(classical);
        }
    }
}
