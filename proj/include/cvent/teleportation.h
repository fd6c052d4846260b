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

#ifndef CVENT_TELEPORTATION_H
#define CVENT_TELEPORTATION_H

#include <cstdint>
#include <optional>

#include "cvent/gaussian_state.h"

namespace cvent {

// Resource variances in the closed forms are the squeezed variances of the
// two beams that formed the resource (V1+ of beam 1, V2- of beam 2), not the
// marginals of the entangled beams.

struct TeleportReport {
    double v_out_plus = 0;
    double v_out_minus = 0;
    double fidelity = 0;
    double parametric_gain = 1;
    /// Squeezed-quadrature variance of the signal; 1 for coherent signals.
    double v_sqz = 1;
    bool feedforward_unity = true;
    bool beats_classical = false;
};

/// Unity-gain coherent-state fidelity 2 / sqrt((V+_out + 1)(V-_out + 1)).
double fidelity_from_output(double v_out_plus, double v_out_minus);

/// Coherent signal through a teleporter with parametric gain G on the
/// resource: V+_out = 2 G V1+ + 1, V-_out = (2/G) V2- + 1.
TeleportReport coherent_fidelity(double v1_plus, double v2_minus, double gain);

struct OptimalGain {
    /// Empty in the ideal limits where no finite positive gain is optimal
    /// (V1+ = 0 < V2-, or V2- = 0 < V1+).
    std::optional<double> gain;
    double fidelity = 0;
};

/// Minimizes G V1+ + V2-/G: G = sqrt(V2- / V1+), F_max = 1 / (sqrt(V1+ V2-) + 1).
OptimalGain max_coherent_fidelity(double v1_plus, double v2_minus);

/// Amplitude-squeezed minimum-uncertainty signal with squeezed variance
/// v_sqz and unknown displacement.
TeleportReport squeezed_signal_fidelity(double v1_plus, double v2_minus, double gain, double v_sqz);

/// G = v_sqz * sqrt(V2- / V1+); the fidelity equals the coherent F_max.
OptimalGain max_squeezed_signal_fidelity(double v1_plus, double v2_minus, double v_sqz);

/// Overlap fidelity between a pure single-mode Gaussian `signal` and an
/// arbitrary single-mode Gaussian `output`:
///   2 / sqrt(det(S1 + S2)) * exp(-d^T (S1 + S2)^-1 d / 2).
double gaussian_fidelity(const GaussianState &signal, const GaussianState &output);

struct ResourceVariances {
    double v1_plus = 0;
    double v2_minus = 0;
};

/// The resource as seen by the teleporter: Var(X_A+ + X_B+)/2 and
/// Var(X_A- - X_B-)/2. For a pair built by make_epr_pair these are exactly
/// V1+ and V2-.
ResourceVariances effective_resource_variances(const GaussianState &resource);

struct FeedforwardGains {
    double amplitude = 0;
    double phase = 0;
};

struct TeleportSimulation {
    GaussianState output;
    TeleportReport report;
    FeedforwardGains gains;
};

/// Ensemble-averaged teleporter. Resource mode 0 is Alice's, mode 1 Bob's.
/// Both resource modes pass through a parametric amplifier of gain
/// `parametric_gain`; the signal is mixed with Alice's mode on a 50/50
/// beamsplitter, X+ is measured on the sum port and X- on the difference
/// port, and Bob's mode is displaced by gains * outcomes. Without explicit
/// gains the unity-gain values are derived from the beamsplitter so that the
/// signal enters the output with coefficient one.
TeleportSimulation simulate_teleporter(const GaussianState &resource, const GaussianState &signal,
                                       double parametric_gain,
                                       std::optional<FeedforwardGains> gains = std::nullopt);

struct TeleportShot {
    /// Bob's conditional state after the displacements for this shot.
    GaussianState output;
    double amplitude_outcome = 0;
    double phase_outcome = 0;
    FeedforwardGains gains;
    /// Sensitivity of the output mean to the two outcomes (2x2, columns
    /// amplitude, phase), including feedforward.
    Eigen::Matrix2d outcome_response;
    /// Covariance of the two outcomes.
    Eigen::Matrix2d outcome_cov;
};

/// One run of the teleporter with homodyne outcomes drawn from `seed`.
TeleportShot simulate_teleporter_shot(const GaussianState &resource, const GaussianState &signal,
                                      double parametric_gain, std::uint64_t seed,
                                      std::optional<FeedforwardGains> gains = std::nullopt);

}  // namespace cvent

#endif
