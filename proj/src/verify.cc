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

#include "cvent/verify.h"

#include <array>
#include <cmath>

#include "cvent/entanglement.h"
#include "cvent/fock.h"
#include "cvent/monte_carlo.h"
#include "cvent/protocols.h"

namespace cvent {

namespace {

constexpr std::size_t kFockCutoff = 12;
constexpr double kFockCovTolerance = 1e-5;
constexpr double kFockAmplitudeTolerance = 1e-10;

CheckResult absolute_check(std::string name, double value, double expected, double tolerance) {
    CheckResult c{std::move(name), value, expected, tolerance, false, false};
    c.pass = std::abs(value - expected) <= tolerance;
    return c;
}

CheckResult relative_check(std::string name, double value, double expected, double tolerance) {
    CheckResult c{std::move(name), value, expected, tolerance, true, false};
    c.pass = std::abs(value - expected) <= tolerance * std::abs(expected);
    return c;
}

double max_abs_diff(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

bool VerifySummary::passed() const {
    for (const auto &c : checks) {
        if (!c.pass) {
            return false;
        }
    }
    return !checks.empty();
}

nlohmann::json VerifySummary::to_json() const {
    nlohmann::json list = nlohmann::json::array();
    for (const auto &c : checks) {
        list.push_back({{"name", c.name},
                        {"value", c.value},
                        {"expected", c.expected},
                        {"tolerance", c.tolerance},
                        {"relative", c.relative},
                        {"pass", c.pass}});
    }
    return {{"seed", seed}, {"n_samples", n_samples}, {"passed", passed()}, {"checks", list}};
}

VerifySummary run_oracle_checks(std::uint64_t seed, std::size_t n_samples, double tolerance_scale) {
    VerifySummary out;
    out.seed = seed;
    out.n_samples = n_samples;
    const double band = monte_carlo_relative_band(n_samples) * tolerance_scale;
    const std::array<std::size_t, 1> mode0{0};
    const std::array<std::size_t, 2> modes12{1, 2};

    // Monte-Carlo: vacuum, single- and two-squeezer EPR, split-beam GHZ.
    {
        SampleMatrix s = sample_quadratures(vacuum_state(1), n_samples, seed);
        out.checks.push_back(relative_check("mc.vacuum.variance_plus", s.sample_cov()(0, 0), 1, band));
    }
    struct EprCase {
        const char *name;
        EprRecipe recipe;
    };
    const EprCase epr_cases[] = {{"single_squeezer_s0.5", EprRecipe::single_squeezer(0.5)},
                                 {"two_squeezers_s0.5", EprRecipe::two_squeezers(0.5)}};
    std::uint64_t stream = 1;
    for (const auto &c : epr_cases) {
        GaussianState state = make_epr_pair(c.recipe);
        SampleMatrix s = sample_quadratures(state, n_samples, seed + stream++);
        for (Quadrature q : {Quadrature::kPlus, Quadrature::kMinus}) {
            const char *label = q == Quadrature::kPlus ? "vcv_plus" : "vcv_minus";
            const std::array<std::size_t, 1> cond{quadrature_index(0, q)};
            double est = estimate_conditional_variance(s, quadrature_index(1, q), cond);
            double exact = conditional_variance(state, 1, mode0, q);
            out.checks.push_back(relative_check(std::string("mc.epr.") + c.name + "." + label, est, exact, band));
        }
    }
    {
        GaussianState state = make_epr_pair(EprRecipe::single_squeezer(0.25));
        SampleMatrix s = sample_quadratures(state, n_samples, seed + stream++);
        double est = s.sample_cov()(0, 2);
        double exact = state.cov()(0, 2);
        out.checks.push_back(relative_check("mc.epr.single_squeezer_s0.25.cross_plus", est, exact, band));
    }
    {
        GaussianState state = make_ghz_triple(GhzRecipe::single_squeezer(0.5));
        SampleMatrix s = sample_quadratures(state, n_samples, seed + stream++);
        for (Quadrature q : {Quadrature::kPlus, Quadrature::kMinus}) {
            const char *label = q == Quadrature::kPlus ? "vcv3_plus" : "vcv3_minus";
            const std::array<std::size_t, 2> cond{quadrature_index(1, q), quadrature_index(2, q)};
            double est = estimate_conditional_variance(s, quadrature_index(0, q), cond);
            double exact = conditional_variance(state, 0, modes12, q);
            out.checks.push_back(relative_check(std::string("mc.ghz.single_squeezer_s0.5.") + label, est, exact, band));
        }
    }

    // Fock oracle at weak squeezing.
    const double cov_tol = kFockCovTolerance * tolerance_scale;
    for (double g : {0.8, 0.9, 1.1, 1.25}) {
        FockVector f = fock_squeezed_vacuum(g, kFockCutoff);
        Eigen::MatrixXd engine = apply_squeezer(vacuum_state(1), 0, g).cov();
        out.checks.push_back(absolute_check("fock.squeezed_vacuum.G" + std::to_string(g).substr(0, 4) + ".cov",
                                            max_abs_diff(fock_quadrature_covariance(f), engine), 0, cov_tol));
    }
    struct FockPair {
        const char *name;
        double g1;
        double g2;
    };
    const FockPair pairs[] = {{"two_squeezers_G0.8", 0.8, 1.25}, {"single_squeezer_G0.8", 0.8, 1.0}};
    for (const auto &p : pairs) {
        FockVector in = fock_product(fock_squeezed_vacuum(p.g1, kFockCutoff), fock_squeezed_vacuum(p.g2, kFockCutoff));
        FockVector out_state = fock_beamsplitter(in, 0.5);
        Eigen::MatrixXd engine = make_epr_pair(EprRecipe::from_squeezing(p.g1, p.g2)).cov();
        out.checks.push_back(absolute_check(std::string("fock.epr.") + p.name + ".cov",
                                            max_abs_diff(fock_quadrature_covariance(out_state), engine), 0, cov_tol));
        double odd = 0;
        for (std::size_t a = 0; a <= kFockCutoff; ++a) {
            for (std::size_t b = 0; b <= kFockCutoff; ++b) {
                if ((a + b) % 2) {
                    odd += std::norm(out_state.amplitude(a, b));
                }
            }
        }
        out.checks.push_back(absolute_check(std::string("fock.epr.") + p.name + ".odd_parity_weight", odd, 0,
                                            kFockAmplitudeTolerance * tolerance_scale));
    }
    {
        FockVector in =
            fock_product(fock_squeezed_vacuum(0.9, kFockCutoff), fock_squeezed_vacuum(1 / 0.9, kFockCutoff));
        FockVector e = fock_beamsplitter(in, 0.5);
        double unseparated = std::max(std::abs(e.amplitude(2, 0)), std::abs(e.amplitude(0, 2)));
        out.checks.push_back(absolute_check("fock.two_squeezers.unseparated_pair_amplitude", unseparated, 0,
                                            kFockAmplitudeTolerance * tolerance_scale));
    }
    {
        FockVector in = fock_product(fock_squeezed_vacuum(0.9, kFockCutoff), fock_vacuum(1, kFockCutoff));
        FockVector e = fock_beamsplitter(in, 0.5);
        double ratio = std::abs(e.amplitude(2, 0) / e.amplitude(1, 1));
        out.checks.push_back(absolute_check("fock.single_squeezer.ratio_20_to_11", ratio, 1 / std::sqrt(2.0),
                                            1e-12 * tolerance_scale));
    }
    return out;
}

}  // namespace cvent
