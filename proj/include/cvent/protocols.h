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

#ifndef CVENT_PROTOCOLS_H
#define CVENT_PROTOCOLS_H

#include <Eigen/Dense>

#include <array>
#include <cstddef>

#include "cvent/gaussian_state.h"

namespace cvent {

/// Minimum-uncertainty input beam, parameterized by its quadrature variances.
struct SqueezedInput {
    double v_plus = 1;
    double v_minus = 1;

    /// Pure input with V+ = v_plus and V- = 1 / v_plus.
    static SqueezedInput pure(double v_plus);
    /// Squeezer gain that maps vacuum to this input.
    double gain() const { return v_plus; }
    void validate(const char *label) const;
};

/// Two pure squeezed beams mixed on a 50/50 beamsplitter.
struct EprRecipe {
    SqueezedInput beam1;
    SqueezedInput beam2;

    static EprRecipe from_squeezing(double v1_plus, double v2_plus);
    /// Beam 1 amplitude squeezed to `s`, beam 2 vacuum.
    static EprRecipe single_squeezer(double s);
    /// Orthogonal equal squeezing: V1+ = V2- = s.
    static EprRecipe two_squeezers(double s);
    void validate() const;
};

GaussianState make_epr_pair(const EprRecipe &recipe);

/// Closed form V_cv+ V_cv- = 4 / (2 + V1+ V2- + V1- V2+) for pure inputs.
double epr_product_closed_form(const EprRecipe &recipe);

/// Local parametric gain sqrt(V1- / V2+) that unbiases pure EPR entanglement.
double symmetrizing_gain(double v1_minus, double v2_plus);

/// Same gain G on the amplitude quadrature of both modes.
GaussianState symmetrize_epr(const GaussianState &state, std::size_t mode_a, std::size_t mode_b, double gain);
/// Independent gains per mode. Not part of the named protocol.
GaussianState apply_local_gains(const GaussianState &state, std::size_t mode_a, double gain_a, std::size_t mode_b,
                                double gain_b);

/// Row i gives the output GHZ(i+1) as a combination of inputs 1..3:
///   GHZ1 = sqrt(1/3) X1 - sqrt(2/3) X2
///   GHZ2 = sqrt(1/3) X1 + sqrt(1/6) X2 + sqrt(1/2) X3
///   GHZ3 = sqrt(1/3) X1 + sqrt(1/6) X2 - sqrt(1/2) X3
Eigen::Matrix3d ghz_network_coefficients();

struct GhzRecipe {
    std::array<SqueezedInput, 3> beams;

    static GhzRecipe from_squeezing(double v1_plus, double v2_plus, double v3_plus);
    /// Beam 1 amplitude squeezed to `s`, beams 2 and 3 vacuum.
    static GhzRecipe single_squeezer(double s);
    /// V1+ = V2- = V3- = s: equal squeezing, beam 1 orthogonal to beams 2, 3.
    static GhzRecipe equal_squeezers(double s);
    /// Beams 2, 3 with V+ = v and beam 1 with V+ = ghz_maximal_input_variance(v).
    /// This same-quadrature pairing is the one that yields unbiased GHZ
    /// correlations.
    static GhzRecipe maximal(double v23_plus);
    /// The opposite-quadrature pairing V1+ = f(V2,3-); kept for comparison.
    static GhzRecipe maximal_cross_paired(double v23_plus);
    void validate() const;
};

/// The cascade of two beamsplitters (1:2 split, then 1:1) realizing the GHZ
/// network on three modes.
SymplecticOp ghz_network();

GaussianState make_ghz_triple(const GhzRecipe &recipe);

/// (1 - v^2 + sqrt(1 - v^2 + v^4)) / v.
double ghz_maximal_input_variance(double v23);

/// The OPA gain for a split single squeezed beam as commonly printed:
/// (1/sqrt3) * sqrt((V1- + 2) / (V1+ + 2)). It does not unbias the state; see
/// ghz_unbiasing_gain.
double ghz_symmetrizing_gain(double v1_plus, double v1_minus);

/// sqrt((V1- + 2) / (V1+ + 2)): the common gain on all three beams of a split
/// single squeezed beam that equalizes V_cv3+ and V_cv3-. For the pure input
/// the result equals the three-squeezer maximal GHZ state with
/// V2,3+ = G and V1+ = G * V1+.
double ghz_unbiasing_gain(double v1_plus, double v1_minus);

/// Same gain on every listed mode.
GaussianState apply_common_gain(const GaussianState &state, std::span<const std::size_t> modes, double gain);

}  // namespace cvent

#endif
