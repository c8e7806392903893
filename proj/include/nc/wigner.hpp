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
 * Wigner-function values W = tr[rho U diag(pi) U^dagger] and their exact
 * infimum over the unitary group.
 *
 * The infimum is attained by pairing the decreasing density spectrum with
 * the increasing kernel spectrum (von Neumann trace inequality), so
 * `wigner_floor` is a dot product. `sampled_min` is a Monte-Carlo check of
 * that statement over Haar-random unitaries.
 */

#pragma once

#include <cstddef>
#include <cstdint>

#include "nc/core_types.hpp"
#include "nc/random.hpp"
#include "nc/sw_kernel.hpp"

namespace nc {

/// Boundary slack for the classicality predicate.
inline constexpr double kClassicalTol = 1e-12;

/// A matrix with U U^dagger = I within 1e-10 elementwise.
class UnitaryMatrix {
  public:
    explicit UnitaryMatrix(ComplexMatrix entries);

    [[nodiscard]] std::size_t n() const noexcept {
        return static_cast<std::size_t>(entries_.rows());
    }
    [[nodiscard]] const ComplexMatrix &entries() const noexcept {
        return entries_;
    }

    [[nodiscard]] static UnitaryMatrix identity(std::size_t n);

  private:
    ComplexMatrix entries_;
};

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases
/// of diag(R) moved into Q.
[[nodiscard]] UnitaryMatrix haar_unitary(std::size_t n, Rng &rng);

[[nodiscard]] double wigner_value(const HermitianMatrix &rho,
                                  const UnitaryMatrix &u,
                                  const KernelSpectrum &kernel);

/// sum_i r_i (descending) * pi_i (ascending).
[[nodiscard]] double wigner_floor(const Spectrum &r,
                                  const KernelSpectrum &kernel);

[[nodiscard]] bool is_classical(const Spectrum &r,
                                const KernelSpectrum &kernel);

/// The unitary V P that places the smallest kernel eigenvalue on the largest
/// eigenvector of rho, the next smallest on the next, and so on.
[[nodiscard]] UnitaryMatrix optimal_pairing(const HermitianMatrix &rho,
                                            const KernelSpectrum &kernel);

struct SampleOptions {
    std::size_t samples = 1;
    std::uint64_t seed = 0;
    /// The sample budget is split into this many independently seeded shards;
    /// the result depends on (seed, samples, shards) but not on threads.
    std::size_t shards = 8;
};

/// Minimum of wigner_value over identity, the optimal pairing and
/// `samples` Haar unitaries. Shards run on OpenMP threads.
[[nodiscard]] double sampled_min(const HermitianMatrix &rho,
                                 const KernelSpectrum &kernel,
                                 const SampleOptions &options);

/// Reference implementation of sampled_min; identical result.
[[nodiscard]] double sampled_min_serial(const HermitianMatrix &rho,
                                        const KernelSpectrum &kernel,
                                        const SampleOptions &options);

} // namespace nc
