// Copyright 2026 The cvent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CVENT_FOCK_H
#define CVENT_FOCK_H

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

namespace cvent {

/// Amplitudes of a one- or two-mode state in the photon-number basis,
/// truncated at `cutoff` photons per mode. Two-mode amplitudes are stored
/// row-major: index = n_a * (cutoff + 1) + n_b.
struct FockVector {
    std::size_t modes = 1;
    std::size_t cutoff = 0;
    std::vector<std::complex<double>> amplitudes;
    /// 1 - squared norm: probability lost to truncation so far.
    double leakage = 0;

    std::size_t levels() const { return cutoff + 1; }
    double norm() const;
    bool normalized(double tolerance = 1e-12) const;
    std::complex<double> amplitude(std::size_t n) const;
    std::complex<double> amplitude(std::size_t n_a, std::size_t n_b) const;
};

FockVector fock_vacuum(std::size_t modes, std::size_t cutoff);

/// Squeezed vacuum whose quadrature variances are (G, 1/G); only even photon
/// numbers are populated. Requires an even cutoff >= 4.
FockVector fock_squeezed_vacuum(double gain, std::size_t cutoff);

/// |first> (x) |second> for two single-mode vectors of equal cutoff.
FockVector fock_product(const FockVector &first, const FockVector &second);

/// Exact beamsplitter on a two-mode vector, with the same mode convention as
/// SymplecticOp::beamsplitter: a -> sqrt(eta) a + sqrt(1-eta) b,
/// b -> sqrt(1-eta) a - sqrt(eta) b. Photon number is conserved term by
/// term; components pushed above the cutoff are dropped and counted as
/// leakage. Throws CutoffTooSmall when total leakage exceeds `max_leakage`.
FockVector fock_beamsplitter(const FockVector &input, double transmissivity, double max_leakage = 1e-6);

/// Quadrature means in the interleaved (X+, X-) ordering, X+ = a + a^dag,
/// X- = -i (a - a^dag), normalized by the vector's squared norm.
Eigen::VectorXd fock_quadrature_mean(const FockVector &state);

/// Symmetrized quadrature covariance matrix computed from exact number-basis
/// moments, normalized by the squared norm.
Eigen::MatrixXd fock_quadrature_covariance(const FockVector &state);

}  // namespace cvent

#endif
