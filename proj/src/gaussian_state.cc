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

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "cvent/errors.h"
#include "cvent/rng.h"

namespace cvent {

namespace {

Eigen::MatrixXd symmetrized(const Eigen::MatrixXd &m) {
    Eigen::MatrixXd out = 0.5 * (m + m.transpose());
    return out;
}

void require_positive_finite(double value, const char *what) {
    if (!std::isfinite(value) || value <= 0) {
        throw InvalidArgument(std::string(what) + " must be positive and finite, got " +
                              std::to_string(value));
    }
}

}  // namespace

Eigen::MatrixXd symplectic_form(std::size_t mode_count) {
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * mode_count, 2 * mode_count);
    for (std::size_t k = 0; k < mode_count; ++k) {
        omega(2 * k, 2 * k + 1) = 1;
        omega(2 * k + 1, 2 * k) = -1;
    }
    return omega;
}

SymplecticOp::SymplecticOp(Eigen::MatrixXd matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0 || matrix_.rows() % 2 != 0) {
        throw InvalidArgument("symplectic op must be a non-empty square matrix of even size");
    }
    if (!matrix_.allFinite()) {
        throw InvalidArgument("symplectic op has non-finite entries");
    }
}

SymplecticOp SymplecticOp::identity(std::size_t mode_count) {
    if (mode_count == 0) {
        throw InvalidArgument("mode_count must be >= 1");
    }
    return SymplecticOp(Eigen::MatrixXd::Identity(2 * mode_count, 2 * mode_count));
}

SymplecticOp SymplecticOp::squeezer(std::size_t mode_count, std::size_t mode, double gain) {
    require_positive_finite(gain, "squeezer gain");
    if (mode >= mode_count) {
        throw InvalidArgument("squeezer mode out of range");
    }
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(2 * mode_count, 2 * mode_count);
    m(2 * mode, 2 * mode) = std::sqrt(gain);
    m(2 * mode + 1, 2 * mode + 1) = 1 / std::sqrt(gain);
    return SymplecticOp(std::move(m));
}

SymplecticOp SymplecticOp::beamsplitter(std::size_t mode_count, std::size_t mode_a, std::size_t mode_b,
                                        double transmissivity) {
    if (mode_a >= mode_count || mode_b >= mode_count) {
        throw InvalidArgument("beamsplitter mode out of range");
    }
    if (mode_a == mode_b) {
        throw InvalidArgument("beamsplitter needs two distinct modes");
    }
    if (!(transmissivity > 0 && transmissivity < 1)) {
        throw InvalidArgument("beamsplitter transmissivity must lie in (0, 1)");
    }
    double t = std::sqrt(transmissivity);
    double r = std::sqrt(1 - transmissivity);
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(2 * mode_count, 2 * mode_count);
    for (std::size_t q = 0; q < 2; ++q) {
        std::size_t a = 2 * mode_a + q;
        std::size_t b = 2 * mode_b + q;
        m(a, a) = t;
        m(a, b) = r;
        m(b, a) = r;
        m(b, b) = -t;
    }
    return SymplecticOp(std::move(m));
}

SymplecticOp SymplecticOp::then(const SymplecticOp &next) const {
    if (next.mode_count() != mode_count()) {
        throw InvalidArgument("cannot compose symplectic ops of different mode counts");
    }
    return SymplecticOp(next.matrix_ * matrix_);
}

bool SymplecticOp::is_symplectic(double tolerance) const {
    Eigen::MatrixXd omega = symplectic_form(mode_count());
    return (matrix_ * omega * matrix_.transpose() - omega).cwiseAbs().maxCoeff() <= tolerance;
}

GaussianState::GaussianState(Trusted, Eigen::VectorXd mean, Eigen::MatrixXd cov)
    : mean_(std::move(mean)), cov_(symmetrized(cov)) {
}

GaussianState make_trusted_state(Eigen::VectorXd mean, Eigen::MatrixXd cov) {
    return GaussianState(GaussianState::Trusted{}, std::move(mean), std::move(cov));
}

GaussianState::GaussianState(Eigen::VectorXd mean, Eigen::MatrixXd cov) {
    if (mean.size() == 0 || mean.size() % 2 != 0) {
        throw InvalidArgument("mean must have positive even length 2*mode_count");
    }
    if (cov.rows() != mean.size() || cov.cols() != mean.size()) {
        throw InvalidArgument("cov must be a square matrix matching the mean length");
    }
    if (!mean.allFinite() || !cov.allFinite()) {
        throw InvalidArgument("state has non-finite entries");
    }
    double scale = std::max(1.0, cov.cwiseAbs().maxCoeff());
    if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > kEqualityTolerance * scale) {
        throw InvalidState("cov is not symmetric");
    }
    mean_ = std::move(mean);
    cov_ = symmetrized(cov);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov_, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -kPhysicalityTolerance * scale) {
        throw InvalidState("cov is not positive semi-definite");
    }
    if (!is_physical()) {
        throw InvalidState("cov violates the single-mode uncertainty bound V+V- - C^2 >= 1");
    }
}

void GaussianState::check_mode(std::size_t mode) const {
    if (mode >= mode_count()) {
        throw InvalidArgument("mode " + std::to_string(mode) + " out of range for a " +
                              std::to_string(mode_count()) + "-mode state");
    }
}

double GaussianState::variance(std::size_t mode, Quadrature q) const {
    check_mode(mode);
    std::size_t i = quadrature_index(mode, q);
    return cov_(i, i);
}

double GaussianState::correlation(std::size_t mode_a, Quadrature qa, std::size_t mode_b, Quadrature qb) const {
    check_mode(mode_a);
    check_mode(mode_b);
    return cov_(quadrature_index(mode_a, qa), quadrature_index(mode_b, qb));
}

double GaussianState::marginal_uncertainty(std::size_t mode) const {
    check_mode(mode);
    std::size_t p = 2 * mode;
    return cov_(p, p) * cov_(p + 1, p + 1) - cov_(p, p + 1) * cov_(p + 1, p);
}

double GaussianState::determinant() const {
    return cov_.determinant();
}

bool GaussianState::is_pure(double tolerance) const {
    double hadamard = cov_.diagonal().prod();
    return std::abs(determinant() - 1) <= tolerance * std::max(1.0, hadamard);
}

bool GaussianState::is_physical(double tolerance) const {
    for (std::size_t k = 0; k < mode_count(); ++k) {
        if (marginal_uncertainty(k) < 1 - tolerance) {
            return false;
        }
    }
    return true;
}

GaussianState GaussianState::marginal(std::span<const std::size_t> modes) const {
    if (modes.empty()) {
        throw InvalidArgument("marginal needs at least one mode");
    }
    std::vector<std::size_t> idx;
    for (std::size_t m : modes) {
        check_mode(m);
        if (std::count(modes.begin(), modes.end(), m) > 1) {
            throw InvalidArgument("marginal modes must be distinct");
        }
        idx.push_back(2 * m);
        idx.push_back(2 * m + 1);
    }
    return make_trusted_state(mean_(idx), cov_(idx, idx));
}

GaussianState vacuum_state(std::size_t mode_count) {
    if (mode_count == 0) {
        throw InvalidArgument("mode_count must be >= 1");
    }
    return make_trusted_state(Eigen::VectorXd::Zero(2 * mode_count),
                              Eigen::MatrixXd::Identity(2 * mode_count, 2 * mode_count));
}

GaussianState apply(const GaussianState &state, const SymplecticOp &op) {
    if (op.mode_count() != state.mode_count()) {
        throw InvalidArgument("op and state mode counts differ");
    }
    const Eigen::MatrixXd &s = op.matrix();
    return make_trusted_state(s * state.mean(), s * state.cov() * s.transpose());
}

GaussianState apply_squeezer(const GaussianState &state, std::size_t mode, double gain) {
    return apply(state, SymplecticOp::squeezer(state.mode_count(), mode, gain));
}

GaussianState apply_beamsplitter(const GaussianState &state, std::size_t mode_a, std::size_t mode_b,
                                 double transmissivity) {
    return apply(state, SymplecticOp::beamsplitter(state.mode_count(), mode_a, mode_b, transmissivity));
}

GaussianState displace(const GaussianState &state, std::size_t mode, Quadrature q, double amount) {
    state.check_mode(mode);
    if (!std::isfinite(amount)) {
        throw InvalidArgument("displacement must be finite");
    }
    Eigen::VectorXd mean = state.mean();
    mean(quadrature_index(mode, q)) += amount;
    return make_trusted_state(std::move(mean), state.cov());
}

GaussianState tensor_product(const GaussianState &first, const GaussianState &second) {
    auto n1 = first.mean().size();
    auto n2 = second.mean().size();
    Eigen::VectorXd mean(n1 + n2);
    mean << first.mean(), second.mean();
    Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(n1 + n2, n1 + n2);
    cov.topLeftCorner(n1, n1) = first.cov();
    cov.bottomRightCorner(n2, n2) = second.cov();
    return make_trusted_state(std::move(mean), std::move(cov));
}

GaussianState linear_map(const GaussianState &state, const Eigen::MatrixXd &map) {
    if (map.cols() != state.mean().size()) {
        throw InvalidArgument("linear map input dimension does not match the state");
    }
    return GaussianState(map * state.mean(), symmetrized(map * state.cov() * map.transpose()));
}

double quadrature_variance(const GaussianState &state, std::size_t mode, Quadrature q) {
    return state.variance(mode, q);
}

double correlation(const GaussianState &state, std::size_t mode_a, Quadrature qa, std::size_t mode_b,
                   Quadrature qb) {
    return state.correlation(mode_a, qa, mode_b, qb);
}

double sideband_photon_number(const GaussianState &state, std::size_t mode) {
    double n = 0.5 * (state.variance(mode, Quadrature::kPlus) + state.variance(mode, Quadrature::kMinus)) - 1;
    if (n < 0 && n >= -kEqualityTolerance) {
        return 0;
    }
    return n;
}

HomodyneResult homodyne_condition(const GaussianState &state, std::size_t mode, Quadrature q,
                                  double outcome) {
    state.check_mode(mode);
    if (state.mode_count() < 2) {
        throw InvalidArgument("homodyne conditioning needs at least two modes");
    }
    if (!std::isfinite(outcome)) {
        throw InvalidArgument("homodyne outcome must be finite");
    }
    std::size_t measured = quadrature_index(mode, q);
    double var = state.cov()(measured, measured);
    if (var <= kEqualityTolerance) {
        throw DegenerateMeasurement("measured quadrature has vanishing variance");
    }
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < state.mode_count(); ++k) {
        if (k != mode) {
            rest.push_back(2 * k);
            rest.push_back(2 * k + 1);
        }
    }
    Eigen::VectorXd cross = state.cov()(rest, measured);
    Eigen::VectorXd gain = cross / var;
    Eigen::VectorXd mean = state.mean()(rest) + gain * (outcome - state.mean()(measured));
    Eigen::MatrixXd cov = state.cov()(rest, rest) - cross * cross.transpose() / var;
    return HomodyneResult{make_trusted_state(std::move(mean), std::move(cov)), outcome, std::move(gain)};
}

HomodyneResult homodyne_sample(const GaussianState &state, std::size_t mode, Quadrature q, std::uint64_t seed) {
    state.check_mode(mode);
    std::size_t measured = quadrature_index(mode, q);
    auto engine = make_engine(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    double outcome = state.mean()(measured) + std::sqrt(state.cov()(measured, measured)) * normal(engine);
    return homodyne_condition(state, mode, q, outcome);
}

}  // namespace cvent
