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
 * Stratonovich-Weyl kernel spectra. A kernel spectrum pi satisfies
 * sum(pi) = 1 and sum(pi^2) = N; only the spectrum is needed because every
 * phase-space point is a unitary conjugate of one diagonal kernel.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace nc {

class KernelSpectrum {
  public:
    /// Sorts non-increasing and checks both master equations:
    /// |sum - 1| <= 1e-9 and |sum of squares - n| <= 1e-8.
    explicit KernelSpectrum(std::vector<double> pi);

    [[nodiscard]] std::size_t n() const noexcept { return pi_.size(); }
    /// Non-increasing order.
    [[nodiscard]] std::span<const double> values() const noexcept {
        return pi_;
    }
    [[nodiscard]] double operator[](std::size_t i) const { return pi_[i]; }
    /// Non-decreasing order; the coefficients that pair with a
    /// non-increasing density spectrum in the Wigner floor.
    [[nodiscard]] std::vector<double> ascending() const;

    [[nodiscard]] double residual_trace() const noexcept;
    [[nodiscard]] double residual_square() const noexcept;

  private:
    std::vector<double> pi_;
};

inline constexpr double kZetaMax = 1.0471975511965976; // pi / 3

/// The qutrit family (1/3){1 + 2 sqrt3 sin z + 2 cos z,
/// 1 - 2 sqrt3 sin z + 2 cos z, 1 - 4 cos z}, z in [0, pi/3].
/// Throws ModuliOutOfRange.
[[nodiscard]] KernelSpectrum qutrit_kernel(double zeta);

/// Recovers zeta from any 3-level kernel; every ordered qutrit kernel lies
/// on the one-parameter family above.
[[nodiscard]] double qutrit_zeta(const KernelSpectrum &kernel);

/// Throws ModuliOutOfRange unless 0 <= zeta <= pi/3. The 1e-9 slack admits
/// angles typed to ten decimals; the returned value is clamped into range.
double check_zeta(double zeta);

/// Validating constructor; throws MasterEquationViolated or
/// DimensionMismatch.
[[nodiscard]] KernelSpectrum kernel_from_spectrum(std::span<const double> values,
                                                  std::size_t n);

/// 1/n + sqrt(n - 1/n) u with u a uniform unit vector in the trace-free
/// subspace.
[[nodiscard]] KernelSpectrum random_kernel(std::size_t n, std::uint64_t seed);

} // namespace nc
