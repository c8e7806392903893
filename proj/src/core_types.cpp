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

#include "nc/core_types.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "nc/error.hpp"

namespace nc {

namespace {

const double kSqrt3 = std::sqrt(3.0);

std::string describe(std::span<const double> v) {
    std::ostringstream os;
    os.precision(17);
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? ", " : "") << v[i];
    }
    os << ')';
    return os.str();
}

} // namespace

Spectrum::Spectrum(std::vector<double> values, double tol)
    : values_(std::move(values)) {
    if (values_.size() < 2) {
        throw Error(ErrorKind::InvalidArgument,
                    "spectrum dimension must be at least 2");
    }
    std::stable_sort(values_.begin(), values_.end(), std::greater<>());
    double total = 0.0;
    for (double v : values_) {
        if (!std::isfinite(v) || v < -tol || v > 1.0 + tol) {
            throw Error(ErrorKind::NotAState,
                        "spectrum entry outside [0, 1]: " + describe(values_));
        }
        total += v;
    }
    if (std::abs(total - 1.0) > tol) {
        throw Error(ErrorKind::NotAState,
                    "spectrum does not sum to 1: " + describe(values_));
    }
}

Spectrum Spectrum::snapped(std::vector<double> values) {
    for (double &v : values) {
        v = std::max(v, 0.0);
    }
    const double total = std::accumulate(values.begin(), values.end(), 0.0);
    if (total <= 0.0) {
        throw Error(ErrorKind::NotAState, "cannot normalise a zero vector");
    }
    for (double &v : values) {
        v /= total;
    }
    return Spectrum(std::move(values));
}

Spectrum Spectrum::maximally_mixed(std::size_t n) {
    return Spectrum(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

double euclidean_distance(std::span<const double> a,
                          std::span<const double> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "vectors of different length");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

HermitianMatrix::HermitianMatrix(ComplexMatrix entries)
    : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
        throw Error(ErrorKind::NonHermitian, "matrix is not square");
    }
    const Eigen::Index n = entries_.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            if (std::abs(entries_(i, j) - std::conj(entries_(j, i))) >
                kHermitianTol) {
                std::ostringstream os;
                os << "entry (" << i << ", " << j
                   << ") differs from conjugate of its transpose";
                throw Error(ErrorKind::NonHermitian, os.str());
            }
        }
    }
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> d) {
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(d.size()),
                                          static_cast<Eigen::Index>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) {
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
    }
    return HermitianMatrix(std::move(m));
}

bool QutritChart::in_chamber(double tol) const noexcept {
    return xi3 >= -tol && xi8 >= xi3 / kSqrt3 - tol && xi8 <= 0.5 + tol;
}

std::string_view to_string(MetricConvention c) noexcept {
    return c == MetricConvention::Paper ? "paper" : "frobenius";
}

MetricConvention parse_convention(std::string_view name) {
    if (name == "paper") {
        return MetricConvention::Paper;
    }
    if (name == "frobenius") {
        return MetricConvention::Frobenius;
    }
    throw Error(ErrorKind::InvalidArgument,
                "unknown metric convention '" + std::string(name) + "'");
}

Spectrum spectrum_from_matrix(const HermitianMatrix &m) {
    const ComplexMatrix &a = m.entries();
    const double trace = a.trace().real();
    if (std::abs(trace - 1.0) > kStateTol) {
        throw Error(ErrorKind::NotAState,
                    "trace is " + std::to_string(trace) + ", expected 1");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
        a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::NotAState, "eigensolver failed");
    }
    const Eigen::VectorXd &ev = solver.eigenvalues();
    std::vector<double> values(ev.data(), ev.data() + ev.size());
    const double lowest = *std::min_element(values.begin(), values.end());
    if (lowest < -kStateTol) {
        throw Error(ErrorKind::NotAState,
                    "matrix has negative eigenvalue " + std::to_string(lowest));
    }
    return Spectrum::snapped(std::move(values));
}

QutritChart chart_from_spectrum(const Spectrum &r) {
    if (r.n() != 3) {
        throw Error(ErrorKind::DimensionMismatch,
                    "qutrit chart needs a 3-level spectrum, got n=" +
                        std::to_string(r.n()));
    }
    return {kSqrt3 * (r[0] - r[1]) / 2.0, (1.0 - 3.0 * r[2]) / 2.0};
}

Spectrum spectrum_from_chart(const QutritChart &c) {
    if (!c.in_chamber()) {
        std::ostringstream os;
        os.precision(17);
        os << "chart point (" << c.xi3 << ", " << c.xi8
           << ") lies outside the chamber triangle";
        throw Error(ErrorKind::OutOfChamber, os.str());
    }
    const double third = 1.0 / 3.0;
    std::vector<double> r{third + c.xi3 / kSqrt3 + c.xi8 / 3.0,
                          third - c.xi3 / kSqrt3 + c.xi8 / 3.0,
                          third - 2.0 * c.xi8 / 3.0};
    // Boundary points may land a rounding error below zero.
    for (double &v : r) {
        if (v < 0.0) {
            v = 0.0;
        }
    }
    return Spectrum(std::move(r));
}

double metric_factor(std::size_t n) {
    const auto dn = static_cast<double>(n);
    return std::sqrt(dn / (dn - 1.0));
}

double metric_convert(double d, std::size_t n, MetricConvention from,
                      MetricConvention to) {
    if (from == to) {
        return d;
    }
    return to == MetricConvention::Paper ? d * metric_factor(n)
                                         : d / metric_factor(n);
}

} // namespace nc
