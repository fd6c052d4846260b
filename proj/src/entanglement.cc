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

#include "cvent/entanglement.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "cvent/errors.h"

namespace cvent {

namespace {

constexpr double kDegenerateDeterminant = 1e-12;
constexpr double kUnbiasedTolerance = 1e-9;

}  // namespace

double conditional_variance(const GaussianState &state, std::size_t target,
                            std::span<const std::size_t> conditioners, Quadrature q) {
    state.check_mode(target);
    std::vector<std::size_t> idx;
    for (std::size_t c : conditioners) {
        state.check_mode(c);
        if (c == target) {
            throw InvalidArgument("target mode cannot also be a conditioner");
        }
        if (std::count(conditioners.begin(), conditioners.end(), c) > 1) {
            throw InvalidArgument("conditioner modes must be distinct");
        }
        idx.push_back(quadrature_index(c, q));
    }
    std::size_t t = quadrature_index(target, q);
    double v = state.cov()(t, t);
    if (idx.empty()) {
        return v;
    }
    Eigen::MatrixXd block = state.cov()(idx, idx);
    if (block.determinant() <= kDegenerateDeterminant) {
        throw DegenerateConditioner("conditioning covariance block is singular");
    }
    Eigen::VectorXd cross = state.cov()(idx, t);
    return v - cross.dot(block.ldlt().solve(cross));
}

double bipartite_conditional_variance(const GaussianState &state, std::size_t target, std::size_t conditioner,
                                      Quadrature q) {
    double va = state.variance(conditioner, q);
    if (va <= kDegenerateDeterminant) {
        throw DegenerateConditioner("conditioner variance vanishes");
    }
    double c = state.correlation(target, q, conditioner, q);
    return state.variance(target, q) - c * c / va;
}

double expanded_tripartite_conditional_variance(const GaussianState &state, std::size_t target,
                                                std::size_t other_a, std::size_t other_b, Quadrature q) {
    double va = state.variance(target, q);
    double vb = state.variance(other_a, q);
    double vc = state.variance(other_b, q);
    double cab = state.correlation(target, q, other_a, q);
    double cac = state.correlation(target, q, other_b, q);
    double cbc = state.correlation(other_a, q, other_b, q);
    double d = vb * vc - cbc * cbc;
    if (d <= kDegenerateDeterminant) {
        throw DegenerateConditioner("conditioning covariance block is singular");
    }
    double triple = cab * cac * cbc;
    // The printed form subtracts the triple product and its complex
    // conjugate; for real covariances that is twice the term.
    return va - (vb * cac * cac + vc * cab * cab) / d - 2 * triple / d;
}

double minimal_photon_number(double vcv_plus, double vcv_minus) {
    if (!(vcv_plus > 0) || !(vcv_minus > 0) || !std::isfinite(vcv_plus) || !std::isfinite(vcv_minus)) {
        throw InvalidArgument("conditional variances must be positive and finite");
    }
    return 1 / std::sqrt(vcv_plus * vcv_minus) - 1;
}

namespace {

std::optional<double> lambda_of(double n_maximal, double n_present) {
    if (n_present <= kEqualityTolerance) {
        return std::nullopt;
    }
    return n_maximal / n_present;
}

bool pair_is_pure(const GaussianState &state, std::size_t mode_a, std::size_t mode_b) {
    std::array<std::size_t, 2> modes{mode_a, mode_b};
    return state.marginal(modes).is_pure();
}

}  // namespace

std::optional<double> maximality_lambda(const GaussianState &state, std::size_t mode_a, std::size_t mode_b) {
    if (mode_a == mode_b) {
        throw InvalidArgument("maximality needs two distinct modes");
    }
    state.check_mode(mode_a);
    state.check_mode(mode_b);
    if (!pair_is_pure(state, mode_a, mode_b)) {
        throw InvalidState("maximality is defined for pure two-mode states only");
    }
    double n = 0.5 * (sideband_photon_number(state, mode_a) + sideband_photon_number(state, mode_b));
    if (n <= kEqualityTolerance) {
        return std::nullopt;
    }
    std::array<std::size_t, 1> cond{mode_a};
    double vp = conditional_variance(state, mode_b, cond, Quadrature::kPlus);
    double vm = conditional_variance(state, mode_b, cond, Quadrature::kMinus);
    return lambda_of(minimal_photon_number(vp, vm), n);
}

EprReport epr_product(const GaussianState &state, std::size_t mode_a, std::size_t mode_b) {
    if (mode_a == mode_b) {
        throw InvalidArgument("EPR analysis needs two distinct modes");
    }
    state.check_mode(mode_a);
    state.check_mode(mode_b);
    EprReport r;
    r.mode_a = mode_a;
    r.mode_b = mode_b;
    std::array<std::size_t, 1> from_a{mode_a};
    std::array<std::size_t, 1> from_b{mode_b};
    r.vcv_plus = conditional_variance(state, mode_b, from_a, Quadrature::kPlus);
    r.vcv_minus = conditional_variance(state, mode_b, from_a, Quadrature::kMinus);
    r.product = r.vcv_plus * r.vcv_minus;
    r.entangled = r.product < 1;
    r.reverse_vcv_plus = conditional_variance(state, mode_a, from_b, Quadrature::kPlus);
    r.reverse_vcv_minus = conditional_variance(state, mode_a, from_b, Quadrature::kMinus);
    r.symmetric_vcv_plus = std::max(r.vcv_plus, r.reverse_vcv_plus);
    r.symmetric_vcv_minus = std::max(r.vcv_minus, r.reverse_vcv_minus);
    r.n_epr_a = sideband_photon_number(state, mode_a);
    r.n_epr_b = sideband_photon_number(state, mode_b);
    r.n_maximal = minimal_photon_number(r.vcv_plus, r.vcv_minus);
    if (pair_is_pure(state, mode_a, mode_b)) {
        r.lambda = lambda_of(r.n_maximal, 0.5 * (r.n_epr_a + r.n_epr_b));
    }
    return r;
}

GhzReport ghz_product(const GaussianState &state, std::size_t target, std::size_t other_a, std::size_t other_b) {
    if (target == other_a || target == other_b || other_a == other_b) {
        throw InvalidArgument("GHZ analysis needs three distinct modes");
    }
    GhzReport r;
    r.target = target;
    r.other_a = other_a;
    r.other_b = other_b;
    std::array<std::size_t, 2> cond{other_a, other_b};
    r.vcv3_plus = conditional_variance(state, target, cond, Quadrature::kPlus);
    r.vcv3_minus = conditional_variance(state, target, cond, Quadrature::kMinus);
    r.product = r.vcv3_plus * r.vcv3_minus;
    r.violation = r.product < 1;
    r.expanded_vcv3_plus = expanded_tripartite_conditional_variance(state, target, other_a, other_b, Quadrature::kPlus);
    r.expanded_vcv3_minus =
        expanded_tripartite_conditional_variance(state, target, other_a, other_b, Quadrature::kMinus);
    r.expanded_product = r.expanded_vcv3_plus * r.expanded_vcv3_minus;
    r.unbiased = std::abs(r.vcv3_plus - r.vcv3_minus) <= kUnbiasedTolerance;
    r.n_target = sideband_photon_number(state, target);
    r.n_maximal = minimal_photon_number(r.vcv3_plus, r.vcv3_minus);
    r.lambda = lambda_of(r.n_maximal, r.n_target);
    return r;
}

}  // namespace cvent
