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

#include "cvent/protocols.h"

#include <cmath>
#include <string>

#include "cvent/errors.h"

namespace cvent {

namespace {

void require_positive(double v, const char *what) {
    if (!(v > 0) || !std::isfinite(v)) {
        throw InvalidArgument(std::string(what) + " must be positive and finite");
    }
}

}  // namespace

SqueezedInput SqueezedInput::pure(double v_plus) {
    require_positive(v_plus, "squeezed variance");
    return SqueezedInput{v_plus, 1 / v_plus};
}

void SqueezedInput::validate(const char *label) const {
    require_positive(v_plus, label);
    require_positive(v_minus, label);
    if (std::abs(v_plus * v_minus - 1) > kEqualityTolerance) {
        throw InvalidArgument(std::string(label) + " is not minimum uncertainty (V+ V- != 1)");
    }
}

EprRecipe EprRecipe::from_squeezing(double v1_plus, double v2_plus) {
    return EprRecipe{SqueezedInput::pure(v1_plus), SqueezedInput::pure(v2_plus)};
}

EprRecipe EprRecipe::single_squeezer(double s) {
    return from_squeezing(s, 1);
}

EprRecipe EprRecipe::two_squeezers(double s) {
    return from_squeezing(s, 1 / s);
}

void EprRecipe::validate() const {
    beam1.validate("beam 1");
    beam2.validate("beam 2");
}

GaussianState make_epr_pair(const EprRecipe &recipe) {
    recipe.validate();
    GaussianState s = vacuum_state(2);
    s = apply_squeezer(s, 0, recipe.beam1.gain());
    s = apply_squeezer(s, 1, recipe.beam2.gain());
    return apply_beamsplitter(s, 0, 1, 0.5);
}

double epr_product_closed_form(const EprRecipe &recipe) {
    recipe.validate();
    return 4 / (2 + recipe.beam1.v_plus * recipe.beam2.v_minus + recipe.beam1.v_minus * recipe.beam2.v_plus);
}

double symmetrizing_gain(double v1_minus, double v2_plus) {
    require_positive(v1_minus, "V1-");
    require_positive(v2_plus, "V2+");
    return std::sqrt(v1_minus / v2_plus);
}

GaussianState apply_local_gains(const GaussianState &state, std::size_t mode_a, double gain_a, std::size_t mode_b,
                                double gain_b) {
    if (mode_a == mode_b) {
        throw InvalidArgument("local gains need two distinct modes");
    }
    return apply_squeezer(apply_squeezer(state, mode_a, gain_a), mode_b, gain_b);
}

GaussianState symmetrize_epr(const GaussianState &state, std::size_t mode_a, std::size_t mode_b, double gain) {
    return apply_local_gains(state, mode_a, gain, mode_b, gain);
}

Eigen::Matrix3d ghz_network_coefficients() {
    const double third = std::sqrt(1.0 / 3);
    Eigen::Matrix3d m;
    m << third, -std::sqrt(2.0 / 3), 0,
         third, std::sqrt(1.0 / 6), std::sqrt(0.5),
         third, std::sqrt(1.0 / 6), -std::sqrt(0.5);
    return m;
}

GhzRecipe GhzRecipe::from_squeezing(double v1_plus, double v2_plus, double v3_plus) {
    return GhzRecipe{{SqueezedInput::pure(v1_plus), SqueezedInput::pure(v2_plus), SqueezedInput::pure(v3_plus)}};
}

GhzRecipe GhzRecipe::single_squeezer(double s) {
    return from_squeezing(s, 1, 1);
}

GhzRecipe GhzRecipe::equal_squeezers(double s) {
    return from_squeezing(s, 1 / s, 1 / s);
}

GhzRecipe GhzRecipe::maximal(double v23_plus) {
    return from_squeezing(ghz_maximal_input_variance(v23_plus), v23_plus, v23_plus);
}

GhzRecipe GhzRecipe::maximal_cross_paired(double v23_plus) {
    return from_squeezing(ghz_maximal_input_variance(1 / v23_plus), v23_plus, v23_plus);
}

void GhzRecipe::validate() const {
    beams[0].validate("beam 1");
    beams[1].validate("beam 2");
    beams[2].validate("beam 3");
}

SymplecticOp ghz_network() {
    // Half-wave phase flip on beam 2, then mode 0 takes 1/3 of beam 1 against
    // 2/3 of beam 2, and the 2/3 port is split evenly against beam 3.
    Eigen::MatrixXd flip = Eigen::MatrixXd::Identity(6, 6);
    flip(2, 2) = -1;
    flip(3, 3) = -1;
    return SymplecticOp(flip)
        .then(SymplecticOp::beamsplitter(3, 0, 1, 1.0 / 3))
        .then(SymplecticOp::beamsplitter(3, 1, 2, 0.5));
}

GaussianState make_ghz_triple(const GhzRecipe &recipe) {
    recipe.validate();
    GaussianState s = vacuum_state(3);
    for (std::size_t k = 0; k < 3; ++k) {
        s = apply_squeezer(s, k, recipe.beams[k].gain());
    }
    return apply(s, ghz_network());
}

double ghz_maximal_input_variance(double v23) {
    require_positive(v23, "V2,3");
    double v2 = v23 * v23;
    return (1 - v2 + std::sqrt(1 - v2 + v2 * v2)) / v23;
}

double ghz_symmetrizing_gain(double v1_plus, double v1_minus) {
    require_positive(v1_plus, "V1+");
    require_positive(v1_minus, "V1-");
    return std::sqrt((v1_minus + 2) / (v1_plus + 2)) / std::sqrt(3.0);
}

double ghz_unbiasing_gain(double v1_plus, double v1_minus) {
    require_positive(v1_plus, "V1+");
    require_positive(v1_minus, "V1-");
    return std::sqrt((v1_minus + 2) / (v1_plus + 2));
}

GaussianState apply_common_gain(const GaussianState &state, std::span<const std::size_t> modes, double gain) {
    GaussianState out = state;
    for (std::size_t m : modes) {
        out = apply_squeezer(out, m, gain);
    }
    return out;
}

}  // namespace cvent
