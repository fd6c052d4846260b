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

#ifndef CVENT_GAUSSIAN_STATE_H
#define CVENT_GAUSSIAN_STATE_H

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <span>

namespace cvent {

// Conventions used throughout the library:
//
//  * Quadratures are stored interleaved per mode: (X1+, X1-, X2+, X2-, ...).
//  * Variances are normalized so that vacuum has V+ = V- = 1, i.e. the
//    uncertainty bound reads V+ V- >= 1. To convert to the hbar/2 convention
//    (vacuum variance 1/2 with hbar = 1) divide covariances by 2 and means by
//    sqrt(2).
//  * A single sideband frequency is implied; states carry no frequency label.

enum class Quadrature { kPlus, kMinus };

constexpr std::size_t quadrature_index(std::size_t mode, Quadrature q) {
    return 2 * mode + (q == Quadrature::kMinus ? 1 : 0);
}

constexpr double kEqualityTolerance = 1e-12;
constexpr double kPhysicalityTolerance = 1e-9;

/// Linear map on the 2M quadrature vector. Every factory below returns a map
/// that preserves the symplectic form of the (X+, X-) pairing.
class SymplecticOp {
   public:
    explicit SymplecticOp(Eigen::MatrixXd matrix);

    static SymplecticOp identity(std::size_t mode_count);
    /// Degenerate parametric amplifier: X+ -> sqrt(G) X+, X- -> X- / sqrt(G).
    static SymplecticOp squeezer(std::size_t mode_count, std::size_t mode, double gain);
    /// out_a = sqrt(eta) in_a + sqrt(1-eta) in_b,
    /// out_b = sqrt(1-eta) in_a - sqrt(eta) in_b,
    /// applied identically to the X+ and X- quadratures.
    static SymplecticOp beamsplitter(std::size_t mode_count, std::size_t mode_a, std::size_t mode_b,
                                     double transmissivity);

    /// Composition that applies *this first, then `next`.
    SymplecticOp then(const SymplecticOp &next) const;

    std::size_t mode_count() const { return static_cast<std::size_t>(matrix_.rows()) / 2; }
    const Eigen::MatrixXd &matrix() const { return matrix_; }
    bool is_symplectic(double tolerance = kPhysicalityTolerance) const;

   private:
    Eigen::MatrixXd matrix_;
};

/// Symplectic form for `mode_count` modes in interleaved ordering.
Eigen::MatrixXd symplectic_form(std::size_t mode_count);

/// Mean quadrature vector plus quadrature covariance matrix of an M-mode
/// Gaussian state. Immutable; every operation returns a new state.
class GaussianState {
   public:
    /// Validates dimensions, finiteness, symmetry (1e-12), positive
    /// semi-definiteness and single-mode physicality (1e-9). Throws
    /// InvalidArgument on malformed input and InvalidState on unphysical cov.
    GaussianState(Eigen::VectorXd mean, Eigen::MatrixXd cov);

    std::size_t mode_count() const { return static_cast<std::size_t>(mean_.size()) / 2; }
    const Eigen::VectorXd &mean() const { return mean_; }
    const Eigen::MatrixXd &cov() const { return cov_; }

    double variance(std::size_t mode, Quadrature q) const;
    double correlation(std::size_t mode_a, Quadrature qa, std::size_t mode_b, Quadrature qb) const;
    /// V+ V- - C^2 for one mode.
    double marginal_uncertainty(std::size_t mode) const;

    double determinant() const;
    /// det(cov) == 1 within a tolerance scaled by the product of the
    /// diagonal (Hadamard bound), so the check stays meaningful under strong
    /// squeezing.
    bool is_pure(double tolerance = kPhysicalityTolerance) const;
    /// Every single-mode marginal satisfies V+V- - C^2 >= 1 - tolerance.
    bool is_physical(double tolerance = kPhysicalityTolerance) const;

    /// Reduced state on the listed modes, in the listed order.
    GaussianState marginal(std::span<const std::size_t> modes) const;

    void check_mode(std::size_t mode) const;

   private:
    struct Trusted {};
    GaussianState(Trusted, Eigen::VectorXd mean, Eigen::MatrixXd cov);

    friend GaussianState make_trusted_state(Eigen::VectorXd mean, Eigen::MatrixXd cov);

    Eigen::VectorXd mean_;
    Eigen::MatrixXd cov_;
};

/// Builds a state without the O(M^3) validation; used internally by maps that
/// provably keep a valid state valid. Still symmetrizes the covariance.
GaussianState make_trusted_state(Eigen::VectorXd mean, Eigen::MatrixXd cov);

GaussianState vacuum_state(std::size_t mode_count);

GaussianState apply(const GaussianState &state, const SymplecticOp &op);
GaussianState apply_squeezer(const GaussianState &state, std::size_t mode, double gain);
GaussianState apply_beamsplitter(const GaussianState &state, std::size_t mode_a, std::size_t mode_b,
                                 double transmissivity);
GaussianState displace(const GaussianState &state, std::size_t mode, Quadrature q, double amount);

/// Independent composition: modes of `first` followed by modes of `second`.
GaussianState tensor_product(const GaussianState &first, const GaussianState &second);

/// Applies a general (not necessarily symplectic) linear map from 2M to 2K
/// quadratures. The result is validated, so maps that would produce an
/// unphysical state throw InvalidState. Models classical feedforward averaged
/// over measurement outcomes.
GaussianState linear_map(const GaussianState &state, const Eigen::MatrixXd &map);

double quadrature_variance(const GaussianState &state, std::size_t mode, Quadrature q);
double correlation(const GaussianState &state, std::size_t mode_a, Quadrature qa, std::size_t mode_b,
                   Quadrature qb);

/// Mean photon number in the sidebands: (V+ + V-)/2 - 1.
double sideband_photon_number(const GaussianState &state, std::size_t mode);

struct HomodyneResult {
    GaussianState state;  ///< remaining modes, measured mode removed
    double outcome;
    /// Regression of the remaining quadratures on the outcome; the remaining
    /// mean is prior_mean + gain * (outcome - measured_mean).
    Eigen::VectorXd gain;
};

/// Ideal homodyne detection of one quadrature with a supplied outcome.
/// Requires at least two modes. Throws DegenerateMeasurement when the
/// measured variance is <= 1e-12.
HomodyneResult homodyne_condition(const GaussianState &state, std::size_t mode, Quadrature q,
                                  double outcome);
/// As above, with the outcome drawn from the measured marginal.
HomodyneResult homodyne_sample(const GaussianState &state, std::size_t mode, Quadrature q,
                               std::uint64_t seed);

}  // namespace cvent

#endif
