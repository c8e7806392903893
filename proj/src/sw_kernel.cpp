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

#include "nc/sw_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "nc/error.hpp"
#include "nc/random.hpp"

namespace nc {

namespace {

constexpr double kTraceTol = 1e-9;
constexpr double kSquareTol = 1e-8;
constexpr double kZetaSlack = 1e-9;

} // namespace

KernelSpectrum::KernelSpectrum(std::vector<double> pi) : pi_(std::move(pi)) {
    if (pi_.size() < 2) {
        throw Error(ErrorKind::InvalidArgument,
                    "kernel dimension must be at least 2");
    }
    std::stable_sort(pi_.begin(), pi_.end(), std::greater<>());
    const double rt = residual_trace();
    const double rs = residual_square();
    if (!(rt <= kTraceTol) || !(rs <= kSquareTol)) {
        std::ostringstream os;
        os << "trace residual " << rt << ", square residual " << rs
           << " (n=" << pi_.size() << ")";
        throw Error(ErrorKind::MasterEquationViolated, os.str());
    }
}

std::vector<double> KernelSpectrum::ascending() const {
    return {pi_.rbegin(), pi_.rend()};
}

double KernelSpectrum::residual_trace() const noexcept {
    double s = 0.0;
    for (double p : pi_) {
        s += p;
    }
    return std::abs(s - 1.0);
}

double KernelSpectrum::residual_square() const noexcept {
    double s = 0.0;
    for (double p : pi_) {
        s += p * p;
    }
    return std::abs(s - static_cast<double>(pi_.size()));
}

double check_zeta(double zeta) {
    if (!(zeta >= -kZetaSlack && zeta <= kZetaMax + kZetaSlack)) {
        std::ostringstream os;
        os.precision(17);
        os << "zeta=" << zeta << " outside [0, pi/3]";
        throw Error(ErrorKind::ModuliOutOfRange, os.str());
    }
    return std::clamp(zeta, 0.0, kZetaMax);
}

KernelSpectrum qutrit_kernel(double zeta) {
    zeta = check_zeta(zeta);
    const double s = std::sin(zeta);
    const double c = std::cos(zeta);
    const double r3 = std::sqrt(3.0);
    return KernelSpectrum({(1.0 + 2.0 * r3 * s + 2.0 * c) / 3.0,
                           (1.0 - 2.0 * r3 * s + 2.0 * c) / 3.0,
                           (1.0 - 4.0 * c) / 3.0});
}

double qutrit_zeta(const KernelSpectrum &kernel) {
    if (kernel.n() != 3) {
        throw Error(ErrorKind::DimensionMismatch,
                    "qutrit_zeta needs a 3-level kernel");
    }
    // pi1 - pi2 = (4/sqrt3) sin z and pi1 + pi2 - 2 pi3 = 4 cos z.
    const double s = std::sqrt(3.0) * (kernel[0] - kernel[1]) / 4.0;
    const double c = (kernel[0] + kernel[1] - 2.0 * kernel[2]) / 4.0;
    return std::clamp(std::atan2(s, c), 0.0, kZetaMax);
}

KernelSpectrum kernel_from_spectrum(std::span<const double> values,
                                    std::size_t n) {
    if (values.size() != n) {
        throw Error(ErrorKind::DimensionMismatch,
                    "expected " + std::to_string(n) + " kernel values, got " +
                        std::to_string(values.size()));
    }
    return KernelSpectrum(std::vector<double>(values.begin(), values.end()));
}

KernelSpectrum random_kernel(std::size_t n, std::uint64_t seed) {
    if (n < 2) {
        throw Error(ErrorKind::InvalidArgument,
                    "kernel dimension must be at least 2");
    }
    Rng rng = make_rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const auto dn = static_cast<double>(n);
    std::vector<double> u(n);
    double norm = 0.0;
    while (norm < 1e-6) {
        double mean = 0.0;
        for (double &x : u) {
            x = gauss(rng);
            mean += x;
        }
        mean /= dn;
        norm = 0.0;
        for (double &x : u) {
            x -= mean;
            norm += x * x;
        }
        norm = std::sqrt(norm);
    }
    const double radius = std::sqrt(dn - 1.0 / dn);
    std::vector<double> pi(n);
    for (std::size_t i = 0; i < n; ++i) {
        pi[i] = 1.0 / dn + radius * u[i] / norm;
    }
    return KernelSpectrum(std::move(pi));
}

} // namespace nc
