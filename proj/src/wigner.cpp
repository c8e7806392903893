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

#include "nc/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <omp.h>

#include "nc/error.hpp"
#include "nc/parallel.hpp"

namespace nc {

namespace {

constexpr double kUnitaryTol = 1e-10;
constexpr double kImagTol = 1e-10;

void require_same_dimension(std::size_t a, std::size_t b, const char *what) {
    if (a != b) {
        std::ostringstream os;
        os << what << ": dimensions " << a << " and " << b << " differ";
        throw Error(ErrorKind::DimensionMismatch, os.str());
    }
}

std::size_t shard_size(const SampleOptions &opt, std::size_t shard) {
    const std::size_t base = opt.samples / opt.shards;
    return base + (shard < opt.samples % opt.shards ? 1 : 0);
}

double shard_min(const HermitianMatrix &rho, const KernelSpectrum &kernel,
                 const SampleOptions &opt, std::size_t shard) {
    Rng rng = make_rng(opt.seed, shard + 1);
    double best = std::numeric_limits<double>::infinity();
    const std::size_t count = shard_size(opt, shard);
    for (std::size_t i = 0; i < count; ++i) {
        const UnitaryMatrix u = haar_unitary(rho.n(), rng);
        best = std::min(best, wigner_value(rho, u, kernel));
    }
    return best;
}

double deterministic_candidates(const HermitianMatrix &rho,
                                const KernelSpectrum &kernel) {
    return std::min(wigner_value(rho, UnitaryMatrix::identity(rho.n()), kernel),
                    wigner_value(rho, optimal_pairing(rho, kernel), kernel));
}

void check_sample_options(const HermitianMatrix &rho,
                          const KernelSpectrum &kernel,
                          const SampleOptions &opt) {
    require_same_dimension(rho.n(), kernel.n(), "sampled_min");
    if (opt.samples < 1) {
        throw Error(ErrorKind::InvalidArgument, "samples must be >= 1");
    }
    if (opt.shards < 1) {
        throw Error(ErrorKind::InvalidArgument, "shards must be >= 1");
    }
}

} // namespace

UnitaryMatrix::UnitaryMatrix(ComplexMatrix entries)
    : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
        throw Error(ErrorKind::InvalidArgument, "unitary must be square");
    }
    const ComplexMatrix gram = entries_ * entries_.adjoint();
    const ComplexMatrix eye = ComplexMatrix::Identity(gram.rows(), gram.cols());
    if ((gram - eye).cwiseAbs().maxCoeff() > kUnitaryTol) {
        throw Error(ErrorKind::InvalidArgument,
                    "matrix is not unitary within 1e-10");
    }
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t n) {
    const auto k = static_cast<Eigen::Index>(n);
    return UnitaryMatrix(ComplexMatrix::Identity(k, k));
}

UnitaryMatrix haar_unitary(std::size_t n, Rng &rng) {
    const auto k = static_cast<Eigen::Index>(n);
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix z(k, k);
    for (Eigen::Index j = 0; j < k; ++j) {
        for (Eigen::Index i = 0; i < k; ++i) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            z(i, j) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(k, k);
    const ComplexMatrix &r = qr.matrixQR();
    for (Eigen::Index j = 0; j < k; ++j) {
        const Complex d = r(j, j);
        const double mag = std::abs(d);
        q.col(j) *= mag > 0.0 ? d / mag : Complex(1.0);
    }
    return UnitaryMatrix(std::move(q));
}

double wigner_value(const HermitianMatrix &rho, const UnitaryMatrix &u,
                    const KernelSpectrum &kernel) {
    require_same_dimension(rho.n(), u.n(), "wigner_value");
    require_same_dimension(rho.n(), kernel.n(), "wigner_value");
    // tr[rho U diag(pi) U^+] = sum_k pi_k <u_k| rho |u_k>
    const ComplexMatrix &um = u.entries();
    const ComplexMatrix rotated = um.adjoint() * rho.entries() * um;
    Complex total(0.0, 0.0);
    for (std::size_t k = 0; k < kernel.n(); ++k) {
        const auto i = static_cast<Eigen::Index>(k);
        total += kernel[k] * rotated(i, i);
    }
    if (std::abs(total.imag()) >= kImagTol) {
        throw std::logic_error("wigner_value: trace has imaginary part " +
                               std::to_string(total.imag()));
    }
    return total.real();
}

double wigner_floor(const Spectrum &r, const KernelSpectrum &kernel) {
    require_same_dimension(r.n(), kernel.n(), "wigner_floor");
    const std::size_t n = r.n();
    double w = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        w += r[i] * kernel[n - 1 - i];
    }
    return w;
}

bool is_classical(const Spectrum &r, const KernelSpectrum &kernel) {
    return wigner_floor(r, kernel) >= -kClassicalTol;
}

UnitaryMatrix optimal_pairing(const HermitianMatrix &rho,
                              const KernelSpectrum &kernel) {
    require_same_dimension(rho.n(), kernel.n(), "optimal_pairing");
    // Eigen orders eigenvalues ascending and the kernel is stored descending,
    // so column k of the eigenvector matrix already carries the right pairing.
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.entries());
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::NotAState, "eigensolver failed");
    }
    return UnitaryMatrix(solver.eigenvectors());
}

double sampled_min(const HermitianMatrix &rho, const KernelSpectrum &kernel,
                   const SampleOptions &options) {
    check_sample_options(rho, kernel, options);
    double best = deterministic_candidates(rho, kernel);
    const auto shards = static_cast<long>(options.shards);
#pragma omp parallel for num_threads(worker_count()) reduction(min : best) \
    schedule(dynamic, 1)
    for (long s = 0; s < shards; ++s) {
        best = std::min(
            best, shard_min(rho, kernel, options, static_cast<std::size_t>(s)));
    }
    return best;
}

double sampled_min_serial(const HermitianMatrix &rho,
                          const KernelSpectrum &kernel,
                          const SampleOptions &options) {
    check_sample_options(rho, kernel, options);
    double best = deterministic_candidates(rho, kernel);
    for (std::size_t s = 0; s < options.shards; ++s) {
        best = std::min(best, shard_min(rho, kernel, options, s));
    }
    return best;
}

} // namespace nc
