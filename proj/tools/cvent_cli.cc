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

// Command-line front end: figure datasets, entanglement and teleportation
// reports, and the oracle verification suite.
//
// Exit codes: 0 success, 1 invalid arguments, 2 verification failure.

#include <CLI11.hpp>

#include <array>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "cvent/entanglement.h"
#include "cvent/errors.h"
#include "cvent/figures.h"
#include "cvent/json_io.h"
#include "cvent/protocols.h"
#include "cvent/teleportation.h"
#include "cvent/verify.h"

namespace {

using cvent::Dataset;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitVerifyFailed = 2;

struct Output {
    std::string format;
    std::string path;

    void emit(const std::string &text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) {
            throw cvent::InvalidArgument("cannot open output file " + path);
        }
        f << text;
    }

    void emit(const Dataset &d) const {
        std::ostringstream s;
        if (format == "json") {
            s << d.to_json().dump(2) << "\n";
        } else {
            d.write_csv(s);
        }
        emit(s.str());
    }

    void emit(const json &j) const {
        if (format == "csv") {
            throw cvent::InvalidArgument("this command only supports --format json");
        }
        emit(j.dump(2) + "\n");
    }
};

void add_output_flags(CLI::App *cmd, Output &out, const std::string &default_format) {
    cmd->add_option("--format", out.format, "Output format (default " + default_format + ")")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", out.path, "Write to PATH instead of standard output");
}

json read_json_file(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw cvent::InvalidArgument("cannot open " + path);
    }
    try {
        return json::parse(f);
    } catch (const json::exception &e) {
        throw cvent::InvalidArgument(std::string("bad JSON in ") + path + ": " + e.what());
    }
}

std::array<double, 2> parse_pair(const std::string &text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw cvent::InvalidArgument("expected x,p");
    }
    std::size_t used = 0;
    double x = std::stod(text.substr(0, comma), &used);
    double p = std::stod(text.substr(comma + 1), &used);
    return {x, p};
}

json epr_report_json(const cvent::EprRecipe &recipe, std::optional<double> gain) {
    cvent::GaussianState before = cvent::make_epr_pair(recipe);
    double g = gain ? *gain : cvent::symmetrizing_gain(recipe.beam1.v_minus, recipe.beam2.v_plus);
    cvent::GaussianState after = cvent::symmetrize_epr(before, 0, 1, g);
    return json{{"recipe", recipe},
                {"gain", g},
                {"gain_source", gain ? "user" : "symmetrizing"},
                {"before", cvent::epr_product(before, 0, 1)},
                {"after", cvent::epr_product(after, 0, 1)}};
}

json ghz_report_json(const cvent::GhzRecipe &recipe, std::optional<double> gain) {
    const std::array<std::size_t, 3> all{0, 1, 2};
    cvent::GaussianState before = cvent::make_ghz_triple(recipe);
    cvent::GhzReport before_report = cvent::ghz_product(before, 0, 1, 2);
    double printed = cvent::ghz_symmetrizing_gain(recipe.beams[0].v_plus, recipe.beams[0].v_minus);
    double unbiasing = std::sqrt(before_report.vcv3_minus / before_report.vcv3_plus);
    json j{{"recipe", recipe},
           {"before", before_report},
           {"printed_formula_gain", printed},
           {"after_printed_formula_gain", cvent::ghz_product(cvent::apply_common_gain(before, all, printed), 0, 1, 2)},
           {"unbiasing_gain", unbiasing},
           {"after_unbiasing_gain", cvent::ghz_product(cvent::apply_common_gain(before, all, unbiasing), 0, 1, 2)}};
    if (gain) {
        j["gain"] = *gain;
        j["after"] = cvent::ghz_product(cvent::apply_common_gain(before, all, *gain), 0, 1, 2);
    }
    return j;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Gaussian continuous-variable entanglement and teleportation toolkit"};
    app.require_subcommand(1);

    std::string fig_range;
    std::string sweep_range;
    bool decibels = false;
    double fig4_v_sqz = 0.1;
    double teleport_v_sqz = 1.0;
    std::optional<double> gain;
    std::uint64_t seed = 1;
    std::size_t samples = 1000000;
    double tolerance_scale = 1;
    double v1_plus = 0.25;
    double v2_plus = 1;
    double v3_plus = 1;
    std::string recipe_path;
    std::string signal_mean = "0,0";
    Output out;

    auto *fig1 = app.add_subcommand("fig1", "Conditional variance product vs squeezing (one and two squeezed beams)");
    fig1->add_option("--range", fig_range, "lo:hi:n over the squeezed variance s")->default_val("0.01:1:100");
    fig1->add_flag("--db", decibels, "Report squeezing as -10 log10(s)");
    add_output_flags(fig1, out, "csv");

    auto *fig3 = app.add_subcommand("fig3", "Coherent-signal fidelity before and after OPA redistribution");
    fig3->add_option("--range", fig_range, "lo:hi:n over the squeezed variance s")->default_val("0.01:1:100");
    fig3->add_flag("--db", decibels, "Report squeezing as -10 log10(s)");
    add_output_flags(fig3, out, "csv");

    auto *fig4 = app.add_subcommand("fig4", "Squeezed-signal fidelity with unbiased entanglement, with and without OPAs");
    fig4->add_option("--range", fig_range, "lo:hi:n over the resource variance v")->default_val("0.01:1:100");
    fig4->add_option("--vsqz", fig4_v_sqz, "Signal squeezed variance")->default_val(0.1);
    add_output_flags(fig4, out, "csv");

    auto *epr = app.add_subcommand("epr-report", "EPR report before and after local-OPA symmetrization");
    epr->add_option("--v1-plus", v1_plus, "Amplitude variance of input beam 1")->default_val(0.25);
    epr->add_option("--v2-plus", v2_plus, "Amplitude variance of input beam 2")->default_val(1.0);
    epr->add_option("--recipe", recipe_path, "Read the EPR recipe from a JSON file");
    epr->add_option("--gain", gain, "Parametric gain (default: symmetrizing gain)");
    add_output_flags(epr, out, "json");

    auto *ghz = app.add_subcommand("ghz-report", "GHZ report before and after common local OPA gain");
    ghz->add_option("--v1-plus", v1_plus, "Amplitude variance of input beam 1")->default_val(0.25);
    ghz->add_option("--v2-plus", v2_plus, "Amplitude variance of input beam 2")->default_val(1.0);
    ghz->add_option("--v3-plus", v3_plus, "Amplitude variance of input beam 3")->default_val(1.0);
    ghz->add_option("--recipe", recipe_path, "Read the GHZ recipe from a JSON file");
    ghz->add_option("--gain", gain, "Additional parametric gain to report");
    add_output_flags(ghz, out, "json");

    auto *tele = app.add_subcommand("teleport", "Closed-form and simulated teleportation report, or a gain sweep");
    tele->add_option("--v1-plus", v1_plus, "Amplitude variance of resource input beam 1")->default_val(0.25);
    tele->add_option("--v2-plus", v2_plus, "Amplitude variance of resource input beam 2")->default_val(1.0);
    tele->add_option("--recipe", recipe_path, "Read the EPR recipe from a JSON file");
    tele->add_option("--gain", gain, "Parametric gain (default: optimal for the signal)");
    tele->add_option("--vsqz", teleport_v_sqz, "Signal squeezed variance (1 = coherent)")->default_val(1.0);
    tele->add_option("--signal-mean", signal_mean, "Signal displacement x,p")->default_val("0,0");
    tele->add_option("--range", sweep_range, "Sweep parametric gain lo:hi:n and emit CSV rows");
    add_output_flags(tele, out, "json");

    auto *verify = app.add_subcommand("verify", "Run the Monte-Carlo and Fock oracle cross-checks");
    verify->add_option("--seed", seed, "Sampling seed")->default_val(1);
    verify->add_option("--samples", samples, "Monte-Carlo samples per state")->default_val(1000000);
    verify->add_option("--tolerance-scale", tolerance_scale, "Multiplier on every tolerance")->default_val(1.0);
    add_output_flags(verify, out, "json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInvalid;
    }

    if (out.format.empty()) {
        bool tabular = fig1->parsed() || fig3->parsed() || fig4->parsed() || (tele->parsed() && !sweep_range.empty());
        out.format = tabular ? "csv" : "json";
    }

    try {
        if (fig1->parsed()) {
            out.emit(cvent::fig1_dataset(cvent::SweepRange::parse(fig_range), decibels));
        } else if (fig3->parsed()) {
            out.emit(cvent::fig3_dataset(cvent::SweepRange::parse(fig_range), decibels));
        } else if (fig4->parsed()) {
            out.emit(cvent::fig4_dataset(cvent::SweepRange::parse(fig_range), fig4_v_sqz));
        } else if (epr->parsed()) {
            cvent::EprRecipe recipe = recipe_path.empty() ? cvent::EprRecipe::from_squeezing(v1_plus, v2_plus)
                                                          : cvent::epr_recipe_from_json(read_json_file(recipe_path));
            out.emit(epr_report_json(recipe, gain));
        } else if (ghz->parsed()) {
            cvent::GhzRecipe recipe = recipe_path.empty()
                                          ? cvent::GhzRecipe::from_squeezing(v1_plus, v2_plus, v3_plus)
                                          : cvent::ghz_recipe_from_json(read_json_file(recipe_path));
            out.emit(ghz_report_json(recipe, gain));
        } else if (tele->parsed()) {
            cvent::EprRecipe recipe = recipe_path.empty() ? cvent::EprRecipe::from_squeezing(v1_plus, v2_plus)
                                                          : cvent::epr_recipe_from_json(read_json_file(recipe_path));
            if (!(teleport_v_sqz > 0)) {
                throw cvent::InvalidArgument("--vsqz must be positive");
            }
            cvent::GaussianState resource = cvent::make_epr_pair(recipe);
            cvent::ResourceVariances rv = cvent::effective_resource_variances(resource);
            if (!sweep_range.empty()) {
                out.emit(cvent::fidelity_gain_sweep(rv.v1_plus, rv.v2_minus, teleport_v_sqz,
                                                    cvent::SweepRange::parse(sweep_range)));
                return kExitOk;
            }
            double g = 1;
            if (gain) {
                g = *gain;
            } else if (auto best = cvent::max_squeezed_signal_fidelity(rv.v1_plus, rv.v2_minus, teleport_v_sqz).gain) {
                g = *best;
            }
            auto [x, p] = parse_pair(signal_mean);
            cvent::GaussianState signal = cvent::apply_squeezer(cvent::vacuum_state(1), 0, teleport_v_sqz);
            signal = cvent::displace(signal, 0, cvent::Quadrature::kPlus, x);
            signal = cvent::displace(signal, 0, cvent::Quadrature::kMinus, p);
            cvent::TeleportSimulation sim = cvent::simulate_teleporter(resource, signal, g);
            out.emit(json{{"resource", {{"v1_plus", rv.v1_plus}, {"v2_minus", rv.v2_minus}}},
                          {"closed_form", cvent::squeezed_signal_fidelity(rv.v1_plus, rv.v2_minus, g, teleport_v_sqz)},
                          {"simulated", sim.report},
                          {"feedforward_gains", {sim.gains.amplitude, sim.gains.phase}},
                          {"output_state", cvent::state_to_json(sim.output)}});
        } else if (verify->parsed()) {
            if (samples < 2) {
                throw cvent::InvalidArgument("--samples must be at least 2");
            }
            if (!(tolerance_scale >= 0)) {
                throw cvent::InvalidArgument("--tolerance-scale must be non-negative");
            }
            cvent::VerifySummary summary = cvent::run_oracle_checks(seed, samples, tolerance_scale);
            out.emit(summary.to_json());
            return summary.passed() ? kExitOk : kExitVerifyFailed;
        }
    } catch (const cvent::InvalidArgument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}
