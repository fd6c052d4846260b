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

#include "cvent/teleportation.h"

#include <cmath>
#include <string>
#include <vector>

#include "cvent/errors.h"
#include "cvent/rng.h"

namespace cvent {

namespace {

constexpr double kClassicalLimit = 0.5;

void require_positive(double v, const char *what) {
    if (!(v > 0) || !std::isfinite(v)) {
        throw InvalidArgument(std::string(what) + " must be positive and finite");
    }
}

void require_nonnegative(double v, const char *what) {
    if (!(v >= 0) || !std::isfinite(v)) {
        throw InvalidArgument(std::string(what) + " must be non-negative and finite");
    }
}

TeleportReport make_report(double v_out_plus, double v_out_minus, double fidelity, double gain, double v_sqz) {
    TeleportReport r;
    r.v_out_plus = v_out_plus;
    r.v_out_minus = v_out_minus;
    r.fidelity = fidelity;
    r.parametric_gain = gain;
    r.v_sqz = v_sqz;
    r.feedforward_unity = true;
    r.beats_classical = fidelity > kClassicalLimit;
    return r;
}

// Teleporter mode layout after joining resource and signal.
constexpr std::size_t kAlice = 0;
constexpr std::size_t kBob = 1;
constexpr std::size_t kSignal = 2;

struct PreparedTeleporter {
    GaussianState joint;  // after OPAs and the Bell beamsplitter
    std::size_t sum_plus;
    std::size_t diff_minus;
    FeedforwardGains gains;
};

PreparedTeleporter prepare(const GaussianState &resource, const GaussianState &signal, double parametric_gain,
                           std::optional<FeedforwardGains> gains) {
    if (resource.mode_count() != 2) {
        throw InvalidArgument("teleporter resource must have exactly two modes");
    }
    if (signal.mode_count() != 1) {
        throw InvalidArgument("teleporter signal must be a single mode");
    }
    require_positive(parametric_gain, "parametric gain");
    GaussianState joint = tensor_product(resource, signal);
    joint = apply_squeezer(joint, kAlice, parametric_gain);
    joint = apply_squeezer(joint, kBob, parametric_gain);
    // Signal port becomes (S + A)/sqrt2, Alice's port (S - A)/sqrt2.
    SymplecticOp bell = SymplecticOp::beamsplitter(3, kSignal, kAlice, 0.5);
    joint = apply(joint, bell);

    PreparedTeleporter p{joint, quadrature_index(kSignal, Quadrature::kPlus),
                         quadrature_index(kAlice, Quadrature::kMinus), {}};
    if (gains) {
        p.gains = *gains;
    } else {
        std::size_t sig_plus = quadrature_index(kSignal, Quadrature::kPlus);
        std::size_t sig_minus = quadrature_index(kSignal, Quadrature::kMinus);
        p.gains.amplitude = 1 / bell.matrix()(p.sum_plus, sig_plus);
        p.gains.phase = 1 / bell.matrix()(p.diff_minus, sig_minus);
    }
    return p;
}

}  // namespace

double fidelity_from_output(double v_out_plus, double v_out_minus) {
    require_positive(v_out_plus, "output variance V+");
    require_positive(v_out_minus, "output variance V-");
    return 2 / std::sqrt((v_out_plus + 1) * (v_out_minus + 1));
}

TeleportReport coherent_fidelity(double v1_plus, double v2_minus, double gain) {
    require_nonnegative(v1_plus, "V1+");
    require_nonnegative(v2_minus, "V2-");
    require_positive(gain, "parametric gain");
    double v_out_plus = 2 * gain * v1_plus + 1;
    double v_out_minus = 2 / gain * v2_minus + 1;
    double f = 1 / std::sqrt(v1_plus * v2_minus + gain * v1_plus + v2_minus / gain + 1);
    return make_report(v_out_plus, v_out_minus, f, gain, 1);
}

OptimalGain max_coherent_fidelity(double v1_plus, double v2_minus) {
    require_nonnegative(v1_plus, "V1+");
    require_nonnegative(v2_minus, "V2-");
    OptimalGain out;
    out.fidelity = 1 / (std::sqrt(v1_plus * v2_minus) + 1);
    if (v1_plus > 0 && v2_minus > 0) {
        out.gain = std::sqrt(v2_minus / v1_plus);
    } else if (v1_plus == 0 && v2_minus == 0) {
        out.gain = 1.0;
    }
    return out;
}

TeleportReport squeezed_signal_fidelity(double v1_plus, double v2_minus, double gain, double v_sqz) {
    require_nonnegative(v1_plus, "V1+");
    require_nonnegative(v2_minus, "V2-");
    require_positive(gain, "parametric gain");
    require_positive(v_sqz, "signal squeezed variance");
    double v_out_plus = 2 * gain * v1_plus + v_sqz;
    double v_out_minus = 2 / gain * v2_minus + 1 / v_sqz;
    double f = 1 / std::sqrt(v1_plus * v2_minus + gain * v1_plus / v_sqz + v2_minus * v_sqz / gain + 1);
    return make_report(v_out_plus, v_out_minus, f, gain, v_sqz);
}

OptimalGain max_squeezed_signal_fidelity(double v1_plus, double v2_minus, double v_sqz) {
    require_positive(v_sqz, "signal squeezed variance");
    OptimalGain out = max_coherent_fidelity(v1_plus, v2_minus);
    if (out.gain) {
        out.gain = *out.gain * v_sqz;
    }
    return out;
}

double gaussian_fidelity(const GaussianState &signal, const GaussianState &output) {
    if (signal.mode_count() != 1 || output.mode_count() != 1) {
        throw InvalidArgument("fidelity is implemented for single-mode states");
    }
    if (!signal.is_pure()) {
        throw InvalidState("overlap fidelity requires a pure signal");
    }
    Eigen::Matrix2d sum = signal.cov() + output.cov();
    Eigen::Vector2d d = output.mean() - signal.mean();
    return 2 / std::sqrt(sum.determinant()) * std::exp(-0.5 * d.dot(sum.ldlt().solve(d)));
}

ResourceVariances effective_resource_variances(const GaussianState &resource) {
    if (resource.mode_count() != 2) {
        throw InvalidArgument("resource must have exactly two modes");
    }
    const Eigen::MatrixXd &c = resource.cov();
    ResourceVariances r;
    r.v1_plus = 0.5 * (c(0, 0) + c(2, 2) + 2 * c(0, 2));
    r.v2_minus = 0.5 * (c(1, 1) + c(3, 3) - 2 * c(1, 3));
    return r;
}

TeleportSimulation simulate_teleporter(const GaussianState &resource, const GaussianState &signal,
                                       double parametric_gain, std::optional<FeedforwardGains> gains) {
    PreparedTeleporter p = prepare(resource, signal, parametric_gain, gains);
    // Averaged over outcomes, "measure then displace by g * outcome" acts on
    // the quadratures as the linear map out = X_B + g * X_measured.
    Eigen::MatrixXd map = Eigen::MatrixXd::Zero(2, 6);
    map(0, quadrature_index(kBob, Quadrature::kPlus)) = 1;
    map(0, p.sum_plus) = p.gains.amplitude;
    map(1, quadrature_index(kBob, Quadrature::kMinus)) = 1;
    map(1, p.diff_minus) = p.gains.phase;
    GaussianState output = linear_map(p.joint, map);

    double v_sqz = signal.variance(0, Quadrature::kPlus);
    TeleportReport report = make_report(output.variance(0, Quadrature::kPlus), output.variance(0, Quadrature::kMinus),
                                        gaussian_fidelity(signal, output), parametric_gain, v_sqz);
    FeedforwardGains unity = prepare(resource, signal, parametric_gain, std::nullopt).gains;
    report.feedforward_unity = std::abs(unity.amplitude - p.gains.amplitude) <= kEqualityTolerance &&
                               std::abs(unity.phase - p.gains.phase) <= kEqualityTolerance;
    return TeleportSimulation{std::move(output), report, p.gains};
}

TeleportShot simulate_teleporter_shot(const GaussianState &resource, const GaussianState &signal,
                                      double parametric_gain, std::uint64_t seed,
                                      std::optional<FeedforwardGains> gains) {
    PreparedTeleporter p = prepare(resource, signal, parametric_gain, gains);
    // Measure the sum port first; the remaining modes are then (Alice, Bob).
    HomodyneResult first = homodyne_sample(p.joint, kSignal, Quadrature::kPlus, splitmix64(seed));
    HomodyneResult second = homodyne_sample(first.state, kAlice, Quadrature::kMinus, splitmix64(seed + 1));
    GaussianState out = displace(second.state, 0, Quadrature::kPlus, p.gains.amplitude * first.outcome);
    out = displace(out, 0, Quadrature::kMinus, p.gains.phase * second.outcome);

    // first.gain rows: (A+, A-, B+, B-); second.gain rows: (B+, B-).
    Eigen::Vector2d k1_bob(first.gain(2), first.gain(3));
    double k1_alice_minus = first.gain(1);
    Eigen::Vector2d k2(second.gain(0), second.gain(1));
    Eigen::Matrix2d response;
    response.col(0) = k1_bob - k2 * k1_alice_minus + Eigen::Vector2d(p.gains.amplitude, 0);
    response.col(1) = k2 + Eigen::Vector2d(0, p.gains.phase);

    std::vector<std::size_t> measured{p.sum_plus, p.diff_minus};
    Eigen::Matrix2d outcome_cov = p.joint.cov()(measured, measured);

    return TeleportShot{std::move(out), first.outcome, second.outcome, p.gains, response, outcome_cov};
}

}  // namespace cvent
