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
 * Value types shared by every module: ordered spectra, Hermitian matrices,
 * the qutrit orbit-space chart and the two distance conventions.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace nc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kSpectrumTol = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kStateTol = 1e-10;

/**
 * Eigenvalues of a density matrix, stored in non-increasing order.
 *
 * Construction sorts the input and validates it as a probability vector:
 * every entry in [0, 1] and the total equal to 1, both within `tol`.
 */
class Spectrum {
  public:
    explicit Spectrum(std::vector<double> values, double tol = kSpectrumTol);

    /// Clamps entries below zero, renormalises and sorts. Intended for points
    /// produced by iterative solvers that sit within ~1e-10 of the simplex.
    static Spectrum snapped(std::vector<double> values);

    [[nodiscard]] std::size_t n() const noexcept { return values_.size(); }
    [[nodiscard]] std::span<const double> values() const noexcept {
        return values_;
    }
    [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }

    [[nodiscard]] static Spectrum maximally_mixed(std::size_t n);

  private:
    std::vector<double> values_;
};

/// Euclidean distance between two spectra of equal dimension.
[[nodiscard]] double euclidean_distance(std::span<const double> a,
                                        std::span<const double> b);

/// A square complex matrix equal to its conjugate transpose (elementwise
/// within 1e-12).
class HermitianMatrix {
  public:
    explicit HermitianMatrix(ComplexMatrix entries);

    [[nodiscard]] std::size_t n() const noexcept {
        return static_cast<std::size_t>(entries_.rows());
    }
    [[nodiscard]] const ComplexMatrix &entries() const noexcept {
        return entries_;
    }

    [[nodiscard]] static HermitianMatrix diagonal(std::span<const double> d);

  private:
    ComplexMatrix entries_;
};

/// Orbit-space coordinates of a qutrit spectrum. The chamber triangle OAB is
/// xi3 >= 0, xi8 >= xi3/sqrt(3), xi8 <= 1/2.
struct QutritChart {
    double xi3 = 0.0;
    double xi8 = 0.0;

    [[nodiscard]] bool in_chamber(double tol = kSpectrumTol) const noexcept;
};

enum class MetricConvention { Frobenius, Paper };

[[nodiscard]] std::string_view to_string(MetricConvention c) noexcept;
/// Accepts "paper" or "frobenius" (case-sensitive); throws InvalidArgument.
[[nodiscard]] MetricConvention parse_convention(std::string_view name);

/// Sorted eigenvalues of a density matrix. Throws NonHermitian or NotAState.
[[nodiscard]] Spectrum spectrum_from_matrix(const HermitianMatrix &m);

/// xi3 = sqrt(3)(r1 - r2)/2, xi8 = (1 - 3 r3)/2.
[[nodiscard]] QutritChart chart_from_spectrum(const Spectrum &r);

/// Inverse of chart_from_spectrum; throws OutOfChamber.
[[nodiscard]] Spectrum spectrum_from_chart(const QutritChart &c);

/// Scale factor sqrt(n/(n-1)) mapping Frobenius distances between ordered
/// spectra to the orbit-chart ("paper") convention.
[[nodiscard]] double metric_factor(std::size_t n);

[[nodiscard]] double metric_convert(double d, std::size_t n,
                                    MetricConvention from,
                                    MetricConvention to);

} // namespace nc
