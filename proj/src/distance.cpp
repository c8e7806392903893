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

#include "nc/distance.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include <Eigen/QR>
#include <omp.h>

#include "nc/error.hpp"
#include "nc/parallel.hpp"
#include "nc/wigner.hpp"

namespace nc {

namespace detail {

void project_monotone(std::vector<double> &x) {
    // Blocks of pooled means; a block may not exceed its predecessor.
    std::vector<double> mean;
    std::vector<std::size_t> width;
    mean.reserve(x.size());
    width.reserve(x.size());
    for (double v : x) {
        mean.push_back(v);
        width.push_back(1);
        while (mean.size() > 1 && mean[mean.size() - 2] < mean.back()) {
            const std::size_t w = width.back();
            const double m = mean.back();
            mean.pop_back();
            width.pop_back();
            const std::size_t wt = width.back() + w;
            mean.back() = (mean.back() * static_cast<double>(width.back()) +
                           m * static_cast<double>(w)) /
                          static_cast<double>(wt);
            width.back() = wt;
        }
    }
    std::size_t pos = 0;
    for (std::size_t b = 0; b < mean.size(); ++b) {
        for (std::size_t k = 0; k < width[b]; ++k) {
            x[pos++] = mean[b];
        }
    }
}

void project_simplex(std::vector<double> &x) {
    std::vector<double> u = x;
    std::sort(u.begin(), u.end(), std::greater<>());
    double cumulative = 0.0;
    double theta = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        cumulative += u[j];
        const double t = (cumulative - 1.0) / static_cast<double>(j + 1);
        if (u[j] - t > 0.0) {
            theta = t;
        }
    }
    for (double &v : x) {
        v = std::max(v - theta, 0.0);
    }
}

void project_halfspace(std::vector<double> &x, std::span<const double> a) {
    double ax = 0.0;
    double aa = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        ax += a[i] * x[i];
        aa += a[i] * a[i];
    }
    if (ax >= 0.0) {
        return;
    }
    const double scale = ax / aa;
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] -= scale * a[i];
    }
}

} // namespace detail

namespace {

void require_same_dimension(std::size_t a, std::size_t b) {
    if (a != b) {
        throw Error(ErrorKind::DimensionMismatch,
                    "spectrum dimension " + std::to_string(a) +
                        " differs from kernel dimension " + std::to_string(b));
    }
}

/// Largest violation of: ordering, nonnegativity, unit sum, w >= 0.
double constraint_residual(std::span<const double> x,
                           std::span<const double> ascending) {
    double worst = 0.0;
    double total = 0.0;
    double w = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i + 1 < x.size()) {
            worst = std::max(worst, x[i + 1] - x[i]);
        }
        worst = std::max(worst, -x[i]);
        total += x[i];
        w += ascending[i] * x[i];
    }
    worst = std::max(worst, std::abs(total - 1.0));
    return std::max(worst, -w);
}

double squared_change(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

IndicatorResult make_result(const Spectrum &r, Spectrum nearest,
                            double distance_frobenius, double floor,
                            MetricConvention convention) {
    IndicatorResult out{.distance_paper = distance_frobenius *
                                          metric_factor(r.n()),
                        .distance_frobenius = distance_frobenius,
                        .convention = convention,
                        .region = std::nullopt,
                        .nearest = std::move(nearest),
                        .floor = floor,
                        .classical = distance_frobenius == 0.0};
    return out;
}

} // namespace

IndicatorResult qutrit_distance(const QutritChart &c, double zeta,
                                MetricConvention convention) {
    zeta = check_zeta(zeta);
    const Region region = classify_region(c, zeta);
    const QutritAnchors anchors = qutrit_anchor_points(zeta);

    double d = 0.0;
    QutritChart nearest = c;
    switch (region) {
    case Region::OQR:
        break;
    case Region::AQT:
        d = std::hypot(c.xi3 - anchors.Q.xi3, c.xi8 - anchors.Q.xi8);
        nearest = anchors.Q;
        break;
    case Region::QRST:
        d = line_projection(c, zeta) - 0.25;
        nearest = line_foot(c, zeta);
        break;
    case Region::BRS:
        d = std::hypot(c.xi3 - anchors.R.xi3, c.xi8 - anchors.R.xi8);
        nearest = anchors.R;
        break;
    }

    const Spectrum r = spectrum_from_chart(c);
    const double floor = wigner_floor(r, qutrit_kernel(zeta));
    IndicatorResult out{.distance_paper = d,
                        .distance_frobenius = d / metric_factor(3),
                        .convention = convention,
                        .region = region,
                        .nearest = spectrum_from_chart(nearest),
                        .floor = floor,
                        .classical = region == Region::OQR};
    return out;
}

Spectrum project_to_classical(const Spectrum &r, const KernelSpectrum &kernel,
                              const ProjectionOptions &options,
                              ProjectionReport *report) {
    require_same_dimension(r.n(), kernel.n());
    if (!(options.tol > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
    }
    const std::size_t n = r.n();
    const std::vector<double> a = kernel.ascending();

    // A Spectrum is already ordered and normalised; only w can fail.
    if (wigner_floor(r, kernel) >= -kClassicalTol) {
        if (report != nullptr) {
            *report = {};
        }
        return r;
    }

    std::vector<double> x(r.values().begin(), r.values().end());
    // Dykstra: one correction vector per convex set.
    std::vector<double> p_cone(n, 0.0), p_simplex(n, 0.0), p_half(n, 0.0);
    std::vector<double> y(n), before(n);
    std::vector<double> prev_cone(n), prev_simplex(n), prev_half(n);
    const double tol2 = options.tol * options.tol;

    auto step = [&](std::vector<double> &p, auto &&project) {
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = x[i] + p[i];
        }
        project(y);
        for (std::size_t i = 0; i < n; ++i) {
            p[i] = x[i] + p[i] - y[i];
        }
        x.swap(y);
    };

    std::size_t cycle = 0;
    double change = std::numeric_limits<double>::infinity();
    while (cycle < options.max_cycles) {
        ++cycle;
        before = x;
        prev_cone = p_cone;
        prev_simplex = p_simplex;
        prev_half = p_half;
        step(p_cone, [](std::vector<double> &v) { detail::project_monotone(v); });
        step(p_simplex,
             [](std::vector<double> &v) { detail::project_simplex(v); });
        step(p_half,
             [&](std::vector<double> &v) { detail::project_halfspace(v, a); });
        change = squared_change(x, before) + squared_change(p_cone, prev_cone) +
                 squared_change(p_simplex, prev_simplex) +
                 squared_change(p_half, prev_half);
        if (change < tol2 && constraint_residual(x, a) <= 10.0 * options.tol) {
            break;
        }
    }
    const double residual = constraint_residual(x, a);
    if (report != nullptr) {
        *report = {cycle, std::sqrt(change)};
    }
    if (residual > 10.0 * options.tol ||
        (cycle == options.max_cycles && change >= tol2)) {
        std::ostringstream os;
        os << "Dykstra stopped after " << cycle << " cycles, step "
           << std::sqrt(change) << ", constraint residual " << residual;
        throw Error(ErrorKind::NoConvergence, os.str());
    }
    return Spectrum::snapped(std::move(x));
}

IndicatorResult distance_general(const Spectrum &r,
                                 const KernelSpectrum &kernel,
                                 MetricConvention convention,
                                 const ProjectionOptions &options) {
    require_same_dimension(r.n(), kernel.n());
    const double floor = wigner_floor(r, kernel);
    IndicatorResult out = [&] {
        if (floor >= -kClassicalTol) {
            return make_result(r, r, 0.0, floor, convention);
        }
        Spectrum nearest = project_to_classical(r, kernel, options);
        const double d = euclidean_distance(r.values(), nearest.values());
        IndicatorResult res =
            make_result(r, std::move(nearest), d, floor, convention);
        res.classical = false;
        return res;
    }();
    if (r.n() == 3) {
        out.region = out.classical ? Region::OQR
                                   : classify_region(chart_from_spectrum(r),
                                                     qutrit_zeta(kernel));
        // Rounding can put a barely nonclassical point on the OQR side of
        // the chart test; the floor is authoritative.
        if (!out.classical && *out.region == Region::OQR) {
            out.region = Region::QRST;
        }
    }
    return out;
}

Spectrum bruteforce_project(const Spectrum &r, const KernelSpectrum &kernel) {
    require_same_dimension(r.n(), kernel.n());
    const std::size_t n = r.n();
    if (n > 8) {
        throw Error(ErrorKind::InvalidArgument,
                    "brute-force projection supports N <= 8");
    }
    const std::vector<Halfspace> hs = classical_halfspaces(kernel);
    const auto ni = static_cast<Eigen::Index>(n);
    const Eigen::Map<const Eigen::VectorXd> target(r.values().data(), ni);

    constexpr double kFeasTol = 1e-11;
    double best = std::numeric_limits<double>::infinity();
    std::vector<double> best_x;

    const std::size_t subsets = std::size_t{1} << hs.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        const auto active = static_cast<Eigen::Index>(std::popcount(mask));
        if (active >= ni) {
            // The sum row plus N active constraints over-determines x.
            continue;
        }
        Eigen::MatrixXd A(active + 1, ni);
        Eigen::VectorXd b(active + 1);
        A.row(0).setOnes();
        b(0) = 1.0;
        Eigen::Index row = 1;
        for (std::size_t k = 0; k < hs.size(); ++k) {
            if ((mask >> k) & 1U) {
                for (Eigen::Index j = 0; j < ni; ++j) {
                    A(row, j) = hs[k].normal[static_cast<std::size_t>(j)];
                }
                b(row) = hs[k].offset;
                ++row;
            }
        }
        // min |x - r|^2 s.t. A x = b  =>  x = r - A^T mu, A A^T mu = A r - b.
        const Eigen::MatrixXd gram = A * A.transpose();
        const Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(gram);
        const Eigen::VectorXd mu = cod.solve(A * target - b);
        const Eigen::VectorXd x = target - A.transpose() * mu;
        if ((A * x - b).cwiseAbs().maxCoeff() > 1e-9) {
            continue;
        }
        bool feasible = true;
        for (const Halfspace &h : hs) {
            if (h.evaluate({x.data(), n}) < -kFeasTol) {
                feasible = false;
                break;
            }
        }
        if (!feasible) {
            continue;
        }
        const double d = (x - target).norm();
        if (d < best) {
            best = d;
            best_x.assign(x.data(), x.data() + n);
        }
    }
    if (best_x.empty()) {
        throw Error(ErrorKind::InfeasibleModel,
                    "no feasible active set found");
    }
    return Spectrum::snapped(std::move(best_x));
}

std::vector<IndicatorResult>
distance_batch_serial(std::span<const Spectrum> states,
                      const KernelSpectrum &kernel,
                      MetricConvention convention) {
    std::vector<IndicatorResult> out;
    out.reserve(states.size());
    for (const Spectrum &s : states) {
        out.push_back(distance_general(s, kernel, convention));
    }
    return out;
}

std::vector<IndicatorResult> distance_batch(std::span<const Spectrum> states,
                                            const KernelSpectrum &kernel,
                                            MetricConvention convention) {
    std::vector<std::optional<IndicatorResult>> slots(states.size());
    std::exception_ptr failure;
    const auto count = static_cast<long>(states.size());
#pragma omp parallel for num_threads(worker_count()) schedule(dynamic, 16)
    for (long i = 0; i < count; ++i) {
        try {
            slots[static_cast<std::size_t>(i)] = distance_general(
                states[static_cast<std::size_t>(i)], kernel, convention);
        } catch (...) {
#pragma omp critical(nc_batch_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    std::vector<IndicatorResult> out;
    out.reserve(slots.size());
    for (auto &slot : slots) {
        out.push_back(std::move(*slot));
    }
    return out;
}

} // namespace nc
