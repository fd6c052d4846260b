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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is non-zero
// when any criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cvent/entanglement.h"
#include "cvent/figures.h"
#include "cvent/fock.h"
#include "cvent/monte_carlo.h"
#include "cvent/protocols.h"
#include "cvent/teleportation.h"

using namespace cvent;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char *pattern, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. Pure-input EPR product against 4 / (2 + V1+ V2- + V1- V2+).
Outcome criterion_1() {
    auto start = std::chrono::steady_clock::now();
    double worst = 0;
    int points = 0;
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 5; ++j) {
            double v1 = std::pow(10.0, -2 + 2.5 * i / 9.0);
            double v2 = std::pow(10.0, -1 + 2.0 * j / 4.0);
            EprRecipe r = EprRecipe::from_squeezing(v1, v2);
            double closed = 4 / (2 + r.beam1.v_plus * r.beam2.v_minus + r.beam1.v_minus * r.beam2.v_plus);
            worst = std::max(worst, std::abs(epr_product(make_epr_pair(r), 0, 1).product - closed));
            ++points;
        }
    }
    double two = epr_product(make_epr_pair(EprRecipe::two_squeezers(0.5)), 0, 1).product;
    double one = epr_product(make_epr_pair(EprRecipe::single_squeezer(0.5)), 0, 1).product;
    double elapsed = seconds_since(start);
    Outcome o;
    o.pass = points == 50 && worst <= 1e-12 && std::abs(two - 0.64) <= 1e-12 && std::abs(one - 8.0 / 9.0) <= 1e-12 &&
             elapsed < 1;
    o.detail = fmt("50-point grid max |err| %.2e; anchors 0.64 -> %.15g, 8/9 -> %.15g", worst, two, one) +
               fmt("; %.3f s", elapsed);
    return o;
}

// 2. Local OPAs leave the product unchanged.
Outcome criterion_2() {
    double worst = 0;
    for (double s : {0.9, 0.5, 0.25, 0.1}) {
        for (EprRecipe r : {EprRecipe::single_squeezer(s), EprRecipe::two_squeezers(s), EprRecipe::from_squeezing(s, 3)}) {
            GaussianState state = make_epr_pair(r);
            double before = epr_product(state, 0, 1).product;
            for (double g : {0.1, 0.5, 1.0, 2.0, 10.0}) {
                worst = std::max(worst, std::abs(epr_product(symmetrize_epr(state, 0, 1, g), 0, 1).product - before));
            }
        }
    }
    return {worst <= 1e-12, fmt("G in {0.1,0.5,1,2,10} on 12 recipes, max |change| %.2e", worst)};
}

// 3. Symmetrized single-squeezer pair equals the two-squeezer pair at sqrt(s).
Outcome criterion_3() {
    double worst = 0;
    for (double s : {0.9, 0.5, 0.25, 0.1}) {
        GaussianState single = make_epr_pair(EprRecipe::single_squeezer(s));
        GaussianState sym = symmetrize_epr(single, 0, 1, symmetrizing_gain(1 / s, 1));
        GaussianState two = make_epr_pair(EprRecipe::two_squeezers(std::sqrt(s)));
        worst = std::max(worst, (sym.cov() - two.cov()).cwiseAbs().maxCoeff());
    }
    return {worst <= 1e-12, fmt("s in {0.9,0.5,0.25,0.1}, max entrywise |diff| %.2e", worst)};
}

// 4. Photon number and lambda before and after symmetrization.
Outcome criterion_4() {
    double worst_n = 0;
    double worst_after = 0;
    double worst_before = 0;
    for (double s : {0.9, 0.5, 0.25, 0.1, 0.01}) {
        GaussianState single = make_epr_pair(EprRecipe::single_squeezer(s));
        double closed = 2 * std::sqrt(s) / std::pow(1 + std::sqrt(s), 2);
        worst_before = std::max(worst_before, std::abs(*maximality_lambda(single, 0, 1) - closed));
        GaussianState sym = symmetrize_epr(single, 0, 1, symmetrizing_gain(1 / s, 1));
        EprReport r = epr_product(sym, 0, 1);
        double n_min = 1 / std::sqrt(r.product) - 1;
        worst_n = std::max({worst_n, std::abs(sideband_photon_number(sym, 0) - n_min),
                            std::abs(sideband_photon_number(sym, 1) - n_min)});
        worst_after = std::max(worst_after, std::abs(*maximality_lambda(sym, 0, 1) - 1));
    }
    return {worst_n <= 1e-9 && worst_after <= 1e-9 && worst_before <= 1e-9,
            fmt("|n - n_min| %.2e, |lambda_after - 1| %.2e, |lambda_before - 2sqrt(s)/(1+sqrt(s))^2| %.2e", worst_n,
                worst_after, worst_before)};
}

// 5. Closed-form teleportation numbers.
Outcome criterion_5() {
    double a = coherent_fidelity(1, 0, 1).fidelity;
    double b = max_coherent_fidelity(0, 0).fidelity;
    double c = coherent_fidelity(1, 1, 1).fidelity;
    double d = squeezed_signal_fidelity(1, 1, 1, 0.1).fidelity;
    bool pass = std::abs(a - 1 / std::sqrt(2.0)) <= 1e-12 && std::abs(b - 1) <= 1e-12 && std::abs(c - 0.5) <= 1e-12 &&
                std::abs(d - 1 / std::sqrt(12.1)) <= 1e-12;
    return {pass, fmt("F(1,0,1) = %.15g, Fmax(0,0) = %.15g, F(1,1,1) = %.15g", a, b, c) +
                      fmt(", squeezed-signal limit = %.15g", d)};
}

// 6. Simulated teleporter against the output-variance formulas.
Outcome criterion_6() {
    double worst_var = 0;
    double worst_mean = 0;
    int cases = 0;
    for (double s : {0.05, 0.25, 0.5, 0.75, 1.0}) {
        GaussianState resource = make_epr_pair(EprRecipe::single_squeezer(s));
        for (double g : {0.2, 0.5, 1.0, 2.0, 5.0}) {
            for (double d : {-10.0, -1.0, 0.0, 0.5, 7.0}) {
                GaussianState signal =
                    displace(displace(vacuum_state(1), 0, Quadrature::kPlus, d), 0, Quadrature::kMinus, -0.5 * d);
                TeleportSimulation sim = simulate_teleporter(resource, signal, g);
                double v_plus = 2 * g * s + 1;
                double v_minus = 2 / g * 1 + 1;
                worst_var = std::max({worst_var, std::abs(sim.report.v_out_plus - v_plus),
                                      std::abs(sim.report.v_out_minus - v_minus)});
                worst_mean = std::max(worst_mean, (sim.output.mean() - signal.mean()).cwiseAbs().maxCoeff());
                ++cases;
            }
        }
    }
    return {cases == 125 && worst_var <= 1e-10 && worst_mean <= 1e-10,
            fmt("5x5x5 grid (s, G, displacement): max |dV| %.2e, max |dmean| %.2e", worst_var, worst_mean)};
}

// 7. GHZ network, violation, maximal-input formula, OPA gain.
Outcome criterion_7() {
    const std::array<std::size_t, 3> all{0, 1, 2};
    double vacuum_product = ghz_product(make_ghz_triple(GhzRecipe::from_squeezing(1, 1, 1)), 0, 1, 2).product;
    double single_product = ghz_product(make_ghz_triple(GhzRecipe::single_squeezer(0.5)), 0, 1, 2).product;
    double f1 = ghz_maximal_input_variance(1);

    double s = 0.25;
    GaussianState g = make_ghz_triple(GhzRecipe::single_squeezer(s));
    double printed_gain = ghz_symmetrizing_gain(s, 1 / s);
    GhzReport after = ghz_product(apply_common_gain(g, all, printed_gain), 0, 1, 2);
    bool unbiased = std::abs(after.vcv3_plus - after.vcv3_minus) <= 1e-9;

    bool base = vacuum_product == 1.0 && single_product < 1 && f1 == 1;
    Outcome o;
    if (unbiased) {
        o.pass = base;
        o.detail = fmt("vacuum product %.17g, single-squeezer product %.6g, f(1) = %.17g", vacuum_product, single_product,
                       f1) +
                   "; printed gain unbiases the state";
        return o;
    }
    // Fallback: the printed gain leaves the state biased. Check the formula
    // as printed and report the corrected gain.
    double expected_printed = std::sqrt((1 / s + 2) / (s + 2)) / std::sqrt(3.0);
    double corrected = ghz_unbiasing_gain(s, 1 / s);
    GhzReport fixed = ghz_product(apply_common_gain(g, all, corrected), 0, 1, 2);
    bool printed_ok = std::abs(printed_gain - expected_printed) <= 1e-12;
    bool corrected_ok = std::abs(fixed.vcv3_plus - fixed.vcv3_minus) <= 1e-9;
    o.pass = base && printed_ok && corrected_ok;
    o.detail = fmt("vacuum product %.17g, single-squeezer product %.6g, f(1) = %.17g", vacuum_product, single_product, f1) +
               fmt("; primary check fails: printed gain %.12g leaves V_cv3+/V_cv3- = %.6g; fallback: printed formula |err| %.1e",
                   printed_gain, after.vcv3_plus / after.vcv3_minus, std::abs(printed_gain - expected_printed)) +
               fmt("; corrected gain %.12g gives |V_cv3+ - V_cv3-| = %.1e", corrected,
                   std::abs(fixed.vcv3_plus - fixed.vcv3_minus));
    return o;
}

// 8. Monte-Carlo and Fock oracles against the Gaussian engine.
Outcome criterion_8() {
    auto start = std::chrono::steady_clock::now();
    const std::size_t n = 1000000;
    double worst_mc = 0;
    const std::array<std::size_t, 1> a{0};
    const std::array<std::size_t, 2> bc{1, 2};
    for (double s : {0.5, 0.25}) {
        GaussianState epr = make_epr_pair(EprRecipe::single_squeezer(s));
        SampleMatrix m = sample_quadratures(epr, n, 20260101);
        for (Quadrature q : {Quadrature::kPlus, Quadrature::kMinus}) {
            double analytic = conditional_variance(epr, 1, a, q);
            std::array<std::size_t, 1> cond{quadrature_index(0, q)};
            double est = estimate_conditional_variance(m, quadrature_index(1, q), cond);
            worst_mc = std::max(worst_mc, std::abs(est - analytic) / analytic);
        }
    }
    GaussianState ghz = make_ghz_triple(GhzRecipe::single_squeezer(0.5));
    SampleMatrix gm = sample_quadratures(ghz, n, 20260102);
    for (Quadrature q : {Quadrature::kPlus, Quadrature::kMinus}) {
        double analytic = conditional_variance(ghz, 0, bc, q);
        std::array<std::size_t, 2> cond{quadrature_index(1, q), quadrature_index(2, q)};
        double est = estimate_conditional_variance(gm, quadrature_index(0, q), cond);
        worst_mc = std::max(worst_mc, std::abs(est - analytic) / analytic);
    }
    double mc_seconds = seconds_since(start);

    double worst_fock = 0;
    double worst_pair = 0;
    for (int k = 0; k <= 9; ++k) {
        double g = 0.8 + (1.25 - 0.8) * k / 9.0;
        FockVector sq = fock_squeezed_vacuum(g, 12);
        worst_fock = std::max(worst_fock,
                              (fock_quadrature_covariance(sq) - apply_squeezer(vacuum_state(1), 0, g).cov()).cwiseAbs().maxCoeff());
        for (double g2 : {1.0 / g, 1.0}) {
            FockVector out = fock_beamsplitter(fock_product(sq, fock_squeezed_vacuum(g2, 12)), 0.5);
            GaussianState engine = make_epr_pair(EprRecipe::from_squeezing(g, g2));
            worst_fock = std::max(worst_fock, (fock_quadrature_covariance(out) - engine.cov()).cwiseAbs().maxCoeff());
            if (g2 == 1.0 / g) {
                worst_pair = std::max({worst_pair, std::abs(out.amplitude(2, 0)), std::abs(out.amplitude(0, 2))});
            }
        }
    }
    return {worst_mc < 0.01 && mc_seconds < 30 && worst_fock <= 1e-5 && worst_pair < 1e-10,
            fmt("MC max rel err %.2e at 1e6 samples (%.2f s); Fock cov max |diff| %.2e", worst_mc, mc_seconds,
                worst_fock) +
                fmt(" at cutoff 12; two-squeezer |20>,|02> amplitudes <= %.1e", worst_pair)};
}

// 9. Figure datasets: monotone, correct endpoints, byte-stable.
Outcome criterion_9() {
    SweepRange range = SweepRange::parse("0.01:1:100");
    auto csv = [](const Dataset &d) {
        std::ostringstream out;
        d.write_csv(out);
        return out.str();
    };
    auto monotone = [](const Dataset &d, std::size_t col, bool increasing) {
        for (std::size_t r = 1; r < d.rows.size(); ++r) {
            double step = d.rows[r][col] - d.rows[r - 1][col];
            if (increasing ? step <= 0 : step >= 0) {
                return false;
            }
        }
        return true;
    };
    Dataset f1 = fig1_dataset(range);
    Dataset f3 = fig3_dataset(range);
    Dataset f4 = fig4_dataset(range, 0.1);
    bool mono = monotone(f1, 1, true) && monotone(f1, 2, true) && monotone(f3, 1, false) && monotone(f3, 2, false) &&
                monotone(f4, 1, false) && monotone(f4, 2, false);

    Dataset anchors1 = fig1_dataset(SweepRange::parse("0.5:1:2"));
    Dataset near_zero = fig3_dataset(SweepRange::parse("1e-12:1:2"));
    bool ends = std::abs(anchors1.rows[0][1] - 0.64) <= 1e-12 && std::abs(anchors1.rows[0][2] - 8.0 / 9.0) <= 1e-12 &&
                std::abs(f1.rows.back()[1] - 1) <= 1e-12 && std::abs(f1.rows.back()[2] - 1) <= 1e-12 &&
                std::abs(near_zero.rows[0][1] - 1 / std::sqrt(2.0)) <= 1e-9 && std::abs(near_zero.rows[0][2] - 1) <= 1e-5 &&
                std::abs(f3.rows.back()[1] - 0.5) <= 1e-12 && std::abs(f3.rows.back()[2] - 0.5) <= 1e-12 &&
                std::abs(f4.rows.back()[1] - 1 / std::sqrt(12.1)) <= 1e-12 && std::abs(f4.rows.back()[2] - 0.5) <= 1e-12;
    bool stable = csv(f1) == csv(fig1_dataset(range)) && csv(f3) == csv(fig3_dataset(range)) &&
                  csv(f4) == csv(fig4_dataset(range, 0.1));
    return {mono && ends && stable, std::string("monotone ") + (mono ? "yes" : "no") + ", endpoints " +
                                        (ends ? "match" : "mismatch") + ", byte-stable " + (stable ? "yes" : "no")};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"EPR product closed form", criterion_1},
        {"OPA invariance of the EPR product", criterion_2},
        {"symmetrized single squeezer equals two squeezers", criterion_3},
        {"maximality and photon number", criterion_4},
        {"teleportation closed-form numbers", criterion_5},
        {"end-to-end teleporter", criterion_6},
        {"GHZ network and gain", criterion_7},
        {"oracle agreement", criterion_8},
        {"figure datasets", criterion_9},
    };
    int failures = 0;
    int index = 0;
    for (const auto &[name, check] : criteria) {
        ++index;
        Outcome o;
        try {
            o = check();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s criterion %d: %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", index - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
