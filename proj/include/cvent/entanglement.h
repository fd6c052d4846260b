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

#ifndef CVENT_ENTANGLEMENT_H
#define CVENT_ENTANGLEMENT_H

#include <cstddef>
#include <optional>
#include <span>

#include "cvent/gaussian_state.h"

namespace cvent {

/// Residual variance of `target`'s quadrature after the optimal linear
/// estimate from the same quadrature of every conditioner mode (Schur
/// complement). Throws DegenerateConditioner when the conditioning block has
/// determinant <= 1e-12.
double conditional_variance(const GaussianState &state, std::size_t target,
                            std::span<const std::size_t> conditioners, Quadrature q);

/// V_b - |<dX_b dX_a>|^2 / V_a, written out explicitly. Equal to the one
/// conditioner Schur complement; kept as an independent cross-check.
double bipartite_conditional_variance(const GaussianState &state, std::size_t target,
                                      std::size_t conditioner, Quadrature q);

/// Three-beam conditional variance exactly as commonly printed:
///   V_a - (V_b C_ac^2 + V_c C_ab^2)/D - 2 C_ab C_ac C_bc / D,
/// D = V_b V_c - C_bc^2. The Schur complement carries +2 C_ab C_ac C_bc / D,
/// so the two disagree whenever all three correlations are non-zero. This is
/// reported for comparison only; violation flags use the Schur form.
double expanded_tripartite_conditional_variance(const GaussianState &state, std::size_t target,
                                                std::size_t other_a, std::size_t other_b, Quadrature q);

struct EprReport {
    std::size_t mode_a = 0;
    std::size_t mode_b = 1;
    /// Inference of beam b from beam a.
    double vcv_plus = 0;
    double vcv_minus = 0;
    double product = 0;
    bool entangled = false;
    /// Inference of beam a from beam b.
    double reverse_vcv_plus = 0;
    double reverse_vcv_minus = 0;
    /// Max over the two directions.
    double symmetric_vcv_plus = 0;
    double symmetric_vcv_minus = 0;
    double n_epr_a = 0;
    double n_epr_b = 0;
    double n_maximal = 0;
    /// Empty when undefined: no photons in the pair (0/0) or the pair's
    /// two-mode marginal is not pure.
    std::optional<double> lambda;
};

EprReport epr_product(const GaussianState &state, std::size_t mode_a, std::size_t mode_b);

/// Photon number of the unbiased pure state with the same conditional
/// variance product: 1/sqrt(vcv_plus * vcv_minus) - 1.
double minimal_photon_number(double vcv_plus, double vcv_minus);

/// n_maximal / mean(n_a, n_b). Empty when the pair carries no photons
/// (<= 1e-12). Throws InvalidState if the two-mode marginal is mixed.
std::optional<double> maximality_lambda(const GaussianState &state, std::size_t mode_a, std::size_t mode_b);

struct GhzReport {
    std::size_t target = 0;
    std::size_t other_a = 1;
    std::size_t other_b = 2;
    double vcv3_plus = 0;
    double vcv3_minus = 0;
    double product = 0;
    bool violation = false;
    double expanded_vcv3_plus = 0;
    double expanded_vcv3_minus = 0;
    double expanded_product = 0;
    /// |vcv3_plus - vcv3_minus| <= 1e-9.
    bool unbiased = false;
    double n_target = 0;
    /// 1/sqrt(product) - 1, the least photon number of the target beam that
    /// is compatible with the observed conditional variances.
    double n_maximal = 0;
    /// n_maximal / n_target; empty when the target carries no photons.
    std::optional<double> lambda;
};

GhzReport ghz_product(const GaussianState &state, std::size_t target, std::size_t other_a, std::size_t other_b);

}  // namespace cvent

#endif
