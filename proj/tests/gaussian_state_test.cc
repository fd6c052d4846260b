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

#include "cvent/gaussian_state.h"

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <limits>

#include "cvent/errors.h"
#include "cvent/json_io.h"
#include "test_util.h"

using namespace cvent;
using cvent::testing::expect_matrix_near;
using cvent::testing::random_network_state;

TEST(GaussianState, vacuum) {
    GaussianState v1 = vacuum_state(1);
    EXPECT_EQ(v1.mode_count(), 1u);
    EXPECT_EQ(quadrature_variance(v1, 0, Quadrature::kPlus), 1);
    EXPECT_EQ(quadrature_variance(v1, 0, Quadrature::kMinus), 1);
    EXPECT_EQ(correlation(v1, 0, Quadrature::kPlus, 0, Quadrature::kMinus), 0);
    EXPECT_EQ(sideband_photon_number(v1, 0), 0);
    EXPECT_TRUE(v1.mean().isZero());

    GaussianState v2 = vacuum_state(2);
    EXPECT_EQ(v2.cov(), Eigen::MatrixXd::Identity(4, 4));
    EXPECT_THROW(vacuum_state(0), InvalidArgument);
}

TEST(GaussianState, squeezer) {
    GaussianState s = apply_squeezer(vacuum_state(1), 0, 4);
    EXPECT_DOUBLE_EQ(s.variance(0, Quadrature::kPlus), 4);
    EXPECT_DOUBLE_EQ(s.variance(0, Quadrature::kMinus), 0.25);

    GaussianState q = apply_squeezer(vacuum_state(1), 0, 0.25);
    EXPECT_DOUBLE_EQ(q.variance(0, Quadrature::kPlus), 0.25);
    EXPECT_DOUBLE_EQ(q.variance(0, Quadrature::kMinus), 4);

    std::mt19937_64 rng(7);
    GaussianState r = random_network_state(rng, 3, 8);
    expect_matrix_near(apply_squeezer(r, 1, 1).cov(), r.cov(), 0);
    expect_matrix_near(apply_squeezer(apply_squeezer(r, 2, 3.7), 2, 1 / 3.7).cov(), r.cov(), 1e-12);

    EXPECT_THROW(apply_squeezer(r, 0, 0), InvalidArgument);
    EXPECT_THROW(apply_squeezer(r, 0, -1), InvalidArgument);
    EXPECT_THROW(apply_squeezer(r, 0, std::numeric_limits<double>::infinity()), InvalidArgument);
    EXPECT_THROW(apply_squeezer(r, 0, std::numeric_limits<double>::quiet_NaN()), InvalidArgument);
    EXPECT_THROW(apply_squeezer(r, 3, 2), InvalidArgument);
}

TEST(GaussianState, beamsplitter) {
    expect_matrix_near(apply_beamsplitter(vacuum_state(2), 0, 1, 0.5).cov(), Eigen::MatrixXd::Identity(4, 4), 1e-12);

    // Mode 0 squeezed to V+ = 0.5 against vacuum on a 50/50 splitter:
    // V+ = (0.5 + 1)/2 on both outputs, <dX+_1 dX+_2> = (0.5 - 1)/2.
    GaussianState in = apply_squeezer(vacuum_state(2), 0, 0.5);
    GaussianState out = apply_beamsplitter(in, 0, 1, 0.5);
    EXPECT_NEAR(out.variance(0, Quadrature::kPlus), 0.75, 1e-12);
    EXPECT_NEAR(out.variance(1, Quadrature::kPlus), 0.75, 1e-12);
    EXPECT_NEAR(out.correlation(0, Quadrature::kPlus, 1, Quadrature::kPlus), -0.25, 1e-12);
    EXPECT_NEAR(out.correlation(0, Quadrature::kPlus, 1, Quadrature::kMinus), 0, 1e-12);

    EXPECT_THROW(apply_beamsplitter(in, 1, 1, 0.5), InvalidArgument);
    EXPECT_THROW(apply_beamsplitter(in, 0, 1, 0), InvalidArgument);
    EXPECT_THROW(apply_beamsplitter(in, 0, 1, 1), InvalidArgument);
    EXPECT_THROW(apply_beamsplitter(in, 0, 2, 0.5), InvalidArgument);
}

TEST(GaussianState, accessors_reject_bad_indices) {
    GaussianState s = vacuum_state(2);
    EXPECT_EQ(s.correlation(0, Quadrature::kPlus, 1, Quadrature::kPlus), 0);
    EXPECT_THROW(s.variance(2, Quadrature::kPlus), InvalidArgument);
    EXPECT_THROW(s.correlation(0, Quadrature::kPlus, 5, Quadrature::kMinus), InvalidArgument);
    EXPECT_THROW(sideband_photon_number(s, 2), InvalidArgument);
}

TEST(GaussianState, sideband_photon_number) {
    // (4 + 0.25)/2 - 1.
    EXPECT_NEAR(sideband_photon_number(apply_squeezer(vacuum_state(1), 0, 4), 0), 1.125, 1e-12);
    // Single squeezed beam G = 0.25 split with vacuum: V+ = 0.625, V- = 2.5.
    GaussianState epr = apply_beamsplitter(apply_squeezer(vacuum_state(2), 0, 0.25), 0, 1, 0.5);
    EXPECT_NEAR(sideband_photon_number(epr, 0), 0.5625, 1e-12);
    EXPECT_NEAR(sideband_photon_number(epr, 1), 0.5625, 1e-12);
}

TEST(GaussianState, homodyne_conditioning) {
    GaussianState product = tensor_product(apply_squeezer(vacuum_state(1), 0, 0.3), vacuum_state(1));
    HomodyneResult r = homodyne_condition(product, 1, Quadrature::kPlus, 0.7);
    expect_matrix_near(r.state.cov(), apply_squeezer(vacuum_state(1), 0, 0.3).cov(), 1e-15);
    EXPECT_TRUE(r.state.mean().isZero());

    // Single squeezed beam V1+ = 0.5 with vacuum: 2 * 0.5 * 1 / 1.5 = 2/3.
    GaussianState epr = apply_beamsplitter(apply_squeezer(vacuum_state(2), 0, 0.5), 0, 1, 0.5);
    HomodyneResult m = homodyne_condition(epr, 1, Quadrature::kPlus, 0);
    EXPECT_NEAR(m.state.variance(0, Quadrature::kPlus), 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(m.state.determinant(), 1, 1e-9);

    // Mean moves by gain * (outcome - prior mean); gain = C / V = -0.25 / 0.75.
    GaussianState shifted = displace(epr, 1, Quadrature::kPlus, 0.4);
    HomodyneResult k = homodyne_condition(shifted, 1, Quadrature::kPlus, 1.9);
    EXPECT_NEAR(k.state.mean()(0), (-0.25 / 0.75) * 1.5, 1e-12);
    EXPECT_NEAR(k.state.mean()(1), 0, 1e-15);
}

TEST(GaussianState, homodyne_errors_and_sampling) {
    EXPECT_THROW(homodyne_condition(vacuum_state(1), 0, Quadrature::kPlus, 0), InvalidArgument);
    GaussianState extreme = apply_squeezer(vacuum_state(2), 0, 1e-13);
    EXPECT_THROW(homodyne_condition(extreme, 0, Quadrature::kPlus, 0), DegenerateMeasurement);

    GaussianState epr = apply_beamsplitter(apply_squeezer(vacuum_state(2), 0, 0.5), 0, 1, 0.5);
    HomodyneResult a = homodyne_sample(epr, 1, Quadrature::kMinus, 42);
    HomodyneResult b = homodyne_sample(epr, 1, Quadrature::kMinus, 42);
    HomodyneResult c = homodyne_sample(epr, 1, Quadrature::kMinus, 43);
    EXPECT_EQ(a.outcome, b.outcome);
    EXPECT_NE(a.outcome, c.outcome);
    expect_matrix_near(a.state.cov(), c.state.cov(), 1e-15);
}

TEST(GaussianState, displace) {
    std::mt19937_64 rng(3);
    GaussianState s = random_network_state(rng, 2, 5);
    EXPECT_EQ(displace(s, 1, Quadrature::kMinus, 0).mean(), s.mean());
    GaussianState back = displace(displace(s, 1, Quadrature::kMinus, 1.25), 1, Quadrature::kMinus, -1.25);
    EXPECT_EQ(back.mean(), s.mean());
    EXPECT_EQ(back.cov(), s.cov());
    GaussianState v = displace(vacuum_state(1), 0, Quadrature::kPlus, 2);
    EXPECT_EQ(v.mean(), Eigen::Vector2d(2, 0));
    EXPECT_EQ(v.cov(), Eigen::MatrixXd::Identity(2, 2));
}

TEST(GaussianState, constructor_validation) {
    EXPECT_THROW(GaussianState(Eigen::VectorXd::Zero(3), Eigen::MatrixXd::Identity(3, 3)), InvalidArgument);
    EXPECT_THROW(GaussianState(Eigen::VectorXd::Zero(2), Eigen::MatrixXd::Identity(4, 4)), InvalidArgument);
    Eigen::MatrixXd asym = Eigen::MatrixXd::Identity(2, 2);
    asym(0, 1) = 0.1;
    EXPECT_THROW(GaussianState(Eigen::VectorXd::Zero(2), asym), InvalidState);
    EXPECT_THROW(GaussianState(Eigen::VectorXd::Zero(2), 0.5 * Eigen::MatrixXd::Identity(2, 2)), InvalidState);
    Eigen::MatrixXd thermal = 3 * Eigen::MatrixXd::Identity(2, 2);
    GaussianState mixed(Eigen::VectorXd::Zero(2), thermal);
    EXPECT_FALSE(mixed.is_pure());
    EXPECT_TRUE(mixed.is_physical());
}

TEST(GaussianState, marginal_and_tensor_product) {
    std::mt19937_64 rng(5);
    GaussianState a = random_network_state(rng, 2, 6);
    GaussianState b = random_network_state(rng, 1, 2);
    GaussianState ab = tensor_product(a, b);
    std::array<std::size_t, 2> first{0, 1};
    std::array<std::size_t, 1> last{2};
    expect_matrix_near(ab.marginal(first).cov(), a.cov(), 0);
    expect_matrix_near(ab.marginal(last).cov(), b.cov(), 0);
    std::array<std::size_t, 2> dup{1, 1};
    EXPECT_THROW(ab.marginal(dup), InvalidArgument);
}

TEST(SymplecticOp, factories_are_symplectic) {
    EXPECT_TRUE(SymplecticOp::squeezer(3, 1, 0.37).is_symplectic(1e-12));
    EXPECT_TRUE(SymplecticOp::beamsplitter(3, 0, 2, 0.2).is_symplectic(1e-12));
    SymplecticOp net = SymplecticOp::squeezer(2, 0, 5).then(SymplecticOp::beamsplitter(2, 0, 1, 0.3));
    EXPECT_TRUE(net.is_symplectic(1e-12));
    EXPECT_NEAR(std::abs(net.matrix().determinant()), 1, 1e-9);
    Eigen::MatrixXd not_symplectic = Eigen::MatrixXd::Identity(2, 2);
    not_symplectic(0, 0) = 2;
    EXPECT_FALSE(SymplecticOp(not_symplectic).is_symplectic());
    EXPECT_THROW(SymplecticOp(Eigen::MatrixXd::Identity(3, 3)), InvalidArgument);
}

// Property checks over random squeezer/beamsplitter networks.
TEST(GaussianStateProperties, physicality_and_purity) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t modes = 1 + trial % 4;
        GaussianState s = random_network_state(rng, modes, 1 + trial % 9);
        for (std::size_t k = 0; k < modes; ++k) {
            EXPECT_GE(s.marginal_uncertainty(k), 1 - 1e-9);
        }
        EXPECT_TRUE(s.is_pure());
        EXPECT_LE((s.cov() - s.cov().transpose()).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(GaussianStateProperties, beamsplitter_conserves_photons) {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> eta(0.01, 0.99);
    for (int trial = 0; trial < 100; ++trial) {
        GaussianState s = random_network_state(rng, 3, 6);
        double before = sideband_photon_number(s, 0) + sideband_photon_number(s, 2);
        GaussianState t = apply_beamsplitter(s, 0, 2, eta(rng));
        double after = sideband_photon_number(t, 0) + sideband_photon_number(t, 2);
        EXPECT_NEAR(after, before, 1e-12 * std::max(1.0, before));
        EXPECT_NEAR(sideband_photon_number(t, 1), sideband_photon_number(s, 1), 1e-15);
    }
}

TEST(GaussianStateProperties, squeezer_photon_change) {
    for (double g : {0.05, 0.3, 1.0, 2.0, 17.0}) {
        double n = sideband_photon_number(apply_squeezer(vacuum_state(1), 0, g), 0);
        EXPECT_NEAR(n, 0.5 * (g + 1 / g) - 1, 1e-12);
        if (g == 1.0) {
            EXPECT_EQ(n, 0);
        } else {
            EXPECT_GT(n, 0);
        }
    }
}

TEST(GaussianStateProperties, json_round_trip) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        GaussianState s = displace(random_network_state(rng, 1 + trial % 3, 5), 0, Quadrature::kPlus, 0.1 * trial);
        GaussianState back = state_from_json(nlohmann::json::parse(state_to_json(s).dump()));
        EXPECT_EQ(back.mean(), s.mean());
        EXPECT_EQ(back.cov(), s.cov());
    }
    EXPECT_THROW(state_from_json(nlohmann::json{{"mode_count", 1}, {"mean", {0, 0}}}), InvalidArgument);
    EXPECT_THROW(state_from_json(nlohmann::json{{"mode_count", 1}, {"mean", {0, 0}}, {"cov", {0.5, 0, 0, 0.5}}}),
                 InvalidState);
}
