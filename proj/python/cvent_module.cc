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

// Python bindings for the cvent library.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cvent/entanglement.h"
#include "cvent/errors.h"
#include "cvent/figures.h"
#include "cvent/fock.h"
#include "cvent/gaussian_state.h"
#include "cvent/json_io.h"
#include "cvent/monte_carlo.h"
#include "cvent/protocols.h"
#include "cvent/teleportation.h"
#include "cvent/verify.h"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

py::object json_to_python(const nlohmann::json &j) { return py::module_::import("json").attr("loads")(j.dump()); }

template <typename T>
py::object to_dict(const T &value) {
    nlohmann::json j = value;
    return json_to_python(j);
}

py::dict dataset_to_dict(const cvent::Dataset &d) {
    py::dict out;
    out["columns"] = d.columns;
    out["rows"] = d.rows;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Gaussian continuous-variable entanglement toolkit";

    auto invalid_state = py::register_exception<cvent::InvalidState>(m, "InvalidState", PyExc_RuntimeError);
    py::register_exception<cvent::DegenerateMeasurement>(m, "DegenerateMeasurement", PyExc_RuntimeError);
    py::register_exception<cvent::DegenerateConditioner>(m, "DegenerateConditioner", PyExc_RuntimeError);
    py::register_exception<cvent::CutoffTooSmall>(m, "CutoffTooSmall", PyExc_RuntimeError);
    (void)invalid_state;

    py::enum_<cvent::Quadrature>(m, "Quadrature")
        .value("PLUS", cvent::Quadrature::kPlus)
        .value("MINUS", cvent::Quadrature::kMinus);

    // Gaussian core.
    py::class_<cvent::GaussianState>(m, "GaussianState")
        .def(py::init<Eigen::VectorXd, Eigen::MatrixXd>(), "mean"_a, "cov"_a)
        .def_property_readonly("mode_count", &cvent::GaussianState::mode_count)
        .def_property_readonly("mean", &cvent::GaussianState::mean)
        .def_property_readonly("cov", &cvent::GaussianState::cov)
        .def("variance", &cvent::GaussianState::variance, "mode"_a, "quadrature"_a)
        .def("correlation", &cvent::GaussianState::correlation, "mode_a"_a, "qa"_a, "mode_b"_a, "qb"_a)
        .def("marginal_uncertainty", &cvent::GaussianState::marginal_uncertainty, "mode"_a)
        .def("determinant", &cvent::GaussianState::determinant)
        .def("is_pure", &cvent::GaussianState::is_pure, "tolerance"_a = cvent::kPhysicalityTolerance)
        .def("is_physical", &cvent::GaussianState::is_physical, "tolerance"_a = cvent::kPhysicalityTolerance)
        .def("marginal",
             [](const cvent::GaussianState &s, const std::vector<std::size_t> &modes) { return s.marginal(modes); })
        .def("to_dict", [](const cvent::GaussianState &s) { return json_to_python(cvent::state_to_json(s)); })
        .def("__repr__", [](const cvent::GaussianState &s) {
            return "GaussianState(mode_count=" + std::to_string(s.mode_count()) + ")";
        });

    m.def("vacuum_state", &cvent::vacuum_state, "mode_count"_a);
    m.def("apply_squeezer", &cvent::apply_squeezer, "state"_a, "mode"_a, "gain"_a);
    m.def("apply_beamsplitter", &cvent::apply_beamsplitter, "state"_a, "mode_a"_a, "mode_b"_a,
          "transmissivity"_a = 0.5);
    m.def("displace", &cvent::displace, "state"_a, "mode"_a, "quadrature"_a, "amount"_a);
    m.def("tensor_product", &cvent::tensor_product, "first"_a, "second"_a);
    m.def("quadrature_variance", &cvent::quadrature_variance, "state"_a, "mode"_a, "quadrature"_a);
    m.def("sideband_photon_number", &cvent::sideband_photon_number, "state"_a, "mode"_a);
    m.def("state_from_dict", [](const py::dict &d) {
        std::string text = py::str(py::module_::import("json").attr("dumps")(d));
        return cvent::state_from_json(nlohmann::json::parse(text));
    });

    py::class_<cvent::HomodyneResult>(m, "HomodyneResult")
        .def_readonly("state", &cvent::HomodyneResult::state)
        .def_readonly("outcome", &cvent::HomodyneResult::outcome)
        .def_readonly("gain", &cvent::HomodyneResult::gain);
    m.def("homodyne_condition", &cvent::homodyne_condition, "state"_a, "mode"_a, "quadrature"_a, "outcome"_a);
    m.def("homodyne_sample", &cvent::homodyne_sample, "state"_a, "mode"_a, "quadrature"_a, "seed"_a);

    // Entanglement metrics.
    m.def(
        "conditional_variance",
        [](const cvent::GaussianState &s, std::size_t target, const std::vector<std::size_t> &conditioners,
           cvent::Quadrature q) { return cvent::conditional_variance(s, target, conditioners, q); },
        "state"_a, "target"_a, "conditioners"_a, "quadrature"_a);

    py::class_<cvent::EprReport>(m, "EprReport")
        .def_readonly("vcv_plus", &cvent::EprReport::vcv_plus)
        .def_readonly("vcv_minus", &cvent::EprReport::vcv_minus)
        .def_readonly("product", &cvent::EprReport::product)
        .def_readonly("entangled", &cvent::EprReport::entangled)
        .def_readonly("n_epr_a", &cvent::EprReport::n_epr_a)
        .def_readonly("n_epr_b", &cvent::EprReport::n_epr_b)
        .def_readonly("n_maximal", &cvent::EprReport::n_maximal)
        .def_readonly("lambda_", &cvent::EprReport::lambda)
        .def("to_dict", &to_dict<cvent::EprReport>);
    m.def("epr_product", &cvent::epr_product, "state"_a, "mode_a"_a = 0, "mode_b"_a = 1);
    m.def("minimal_photon_number", &cvent::minimal_photon_number, "vcv_plus"_a, "vcv_minus"_a);
    m.def("maximality_lambda", &cvent::maximality_lambda, "state"_a, "mode_a"_a = 0, "mode_b"_a = 1);

    py::class_<cvent::GhzReport>(m, "GhzReport")
        .def_readonly("vcv3_plus", &cvent::GhzReport::vcv3_plus)
        .def_readonly("vcv3_minus", &cvent::GhzReport::vcv3_minus)
        .def_readonly("product", &cvent::GhzReport::product)
        .def_readonly("violation", &cvent::GhzReport::violation)
        .def_readonly("expanded_vcv3_plus", &cvent::GhzReport::expanded_vcv3_plus)
        .def_readonly("expanded_vcv3_minus", &cvent::GhzReport::expanded_vcv3_minus)
        .def_readonly("unbiased", &cvent::GhzReport::unbiased)
        .def_readonly("lambda_", &cvent::GhzReport::lambda)
        .def("to_dict", &to_dict<cvent::GhzReport>);
    m.def("ghz_product", &cvent::ghz_product, "state"_a, "target"_a = 0, "other_a"_a = 1, "other_b"_a = 2);

    // Protocols.
    py::class_<cvent::SqueezedInput>(m, "SqueezedInput")
        .def_readonly("v_plus", &cvent::SqueezedInput::v_plus)
        .def_readonly("v_minus", &cvent::SqueezedInput::v_minus)
        .def_static("pure", &cvent::SqueezedInput::pure, "v_plus"_a);
    py::class_<cvent::EprRecipe>(m, "EprRecipe")
        .def_readonly("beam1", &cvent::EprRecipe::beam1)
        .def_readonly("beam2", &cvent::EprRecipe::beam2)
        .def_static("from_squeezing", &cvent::EprRecipe::from_squeezing, "v1_plus"_a, "v2_plus"_a)
        .def_static("single_squeezer", &cvent::EprRecipe::single_squeezer, "s"_a)
        .def_static("two_squeezers", &cvent::EprRecipe::two_squeezers, "s"_a)
        .def("to_dict", &to_dict<cvent::EprRecipe>);
    py::class_<cvent::GhzRecipe>(m, "GhzRecipe")
        .def_readonly("beams", &cvent::GhzRecipe::beams)
        .def_static("from_squeezing", &cvent::GhzRecipe::from_squeezing, "v1_plus"_a, "v2_plus"_a, "v3_plus"_a)
        .def_static("single_squeezer", &cvent::GhzRecipe::single_squeezer, "s"_a)
        .def_static("equal_squeezers", &cvent::GhzRecipe::equal_squeezers, "s"_a)
        .def_static("maximal", &cvent::GhzRecipe::maximal, "v23_plus"_a)
        .def("to_dict", &to_dict<cvent::GhzRecipe>);

    m.def("make_epr_pair", &cvent::make_epr_pair, "recipe"_a);
    m.def("epr_product_closed_form", &cvent::epr_product_closed_form, "recipe"_a);
    m.def("symmetrizing_gain", &cvent::symmetrizing_gain, "v1_minus"_a, "v2_plus"_a);
    m.def("symmetrize_epr", &cvent::symmetrize_epr, "state"_a, "mode_a"_a, "mode_b"_a, "gain"_a);
    m.def("ghz_network_coefficients", &cvent::ghz_network_coefficients);
    m.def("make_ghz_triple", &cvent::make_ghz_triple, "recipe"_a);
    m.def("ghz_maximal_input_variance", &cvent::ghz_maximal_input_variance, "v23"_a);
    m.def("ghz_symmetrizing_gain", &cvent::ghz_symmetrizing_gain, "v1_plus"_a, "v1_minus"_a);
    m.def("ghz_unbiasing_gain", &cvent::ghz_unbiasing_gain, "v1_plus"_a, "v1_minus"_a);
    m.def(
        "apply_common_gain",
        [](const cvent::GaussianState &s, const std::vector<std::size_t> &modes, double gain) {
            return cvent::apply_common_gain(s, modes, gain);
        },
        "state"_a, "modes"_a, "gain"_a);

    // Teleportation.
    py::class_<cvent::TeleportReport>(m, "TeleportReport")
        .def_readonly("v_out_plus", &cvent::TeleportReport::v_out_plus)
        .def_readonly("v_out_minus", &cvent::TeleportReport::v_out_minus)
        .def_readonly("fidelity", &cvent::TeleportReport::fidelity)
        .def_readonly("parametric_gain", &cvent::TeleportReport::parametric_gain)
        .def_readonly("feedforward_unity", &cvent::TeleportReport::feedforward_unity)
        .def_readonly("beats_classical", &cvent::TeleportReport::beats_classical)
        .def("to_dict", &to_dict<cvent::TeleportReport>);
    py::class_<cvent::OptimalGain>(m, "OptimalGain")
        .def_readonly("gain", &cvent::OptimalGain::gain)
        .def_readonly("fidelity", &cvent::OptimalGain::fidelity);
    py::class_<cvent::FeedforwardGains>(m, "FeedforwardGains")
        .def(py::init([](double a, double p) { return cvent::FeedforwardGains{a, p}; }), "amplitude"_a, "phase"_a)
        .def_readonly("amplitude", &cvent::FeedforwardGains::amplitude)
        .def_readonly("phase", &cvent::FeedforwardGains::phase);
    py::class_<cvent::TeleportSimulation>(m, "TeleportSimulation")
        .def_readonly("output", &cvent::TeleportSimulation::output)
        .def_readonly("report", &cvent::TeleportSimulation::report)
        .def_readonly("gains", &cvent::TeleportSimulation::gains);
    m.def("fidelity_from_output", &cvent::fidelity_from_output, "v_out_plus"_a, "v_out_minus"_a);
    m.def("coherent_fidelity", &cvent::coherent_fidelity, "v1_plus"_a, "v2_minus"_a, "gain"_a);
    m.def("max_coherent_fidelity", &cvent::max_coherent_fidelity, "v1_plus"_a, "v2_minus"_a);
    m.def("squeezed_signal_fidelity", &cvent::squeezed_signal_fidelity, "v1_plus"_a, "v2_minus"_a, "gain"_a,
          "v_sqz"_a);
    m.def("max_squeezed_signal_fidelity", &cvent::max_squeezed_signal_fidelity, "v1_plus"_a, "v2_minus"_a, "v_sqz"_a);
    m.def("gaussian_fidelity", &cvent::gaussian_fidelity, "signal"_a, "output"_a);
    m.def("simulate_teleporter", &cvent::simulate_teleporter, "resource"_a, "signal"_a, "parametric_gain"_a,
          "gains"_a = std::nullopt);

    // Oracles.
    py::class_<cvent::SampleMatrix>(m, "SampleMatrix")
        .def_readonly("columns", &cvent::SampleMatrix::columns)
        .def_readonly("data", &cvent::SampleMatrix::data)
        .def_readonly("seed", &cvent::SampleMatrix::seed)
        .def_property_readonly("n_samples", &cvent::SampleMatrix::n_samples)
        .def("sample_cov", &cvent::SampleMatrix::sample_cov);
    m.def("sample_quadratures", &cvent::sample_quadratures, "state"_a, "n_samples"_a, "seed"_a);
    m.def(
        "estimate_conditional_variance",
        [](const cvent::SampleMatrix &s, std::size_t target, const std::vector<std::size_t> &conditioners) {
            return cvent::estimate_conditional_variance(s, target, conditioners);
        },
        "samples"_a, "target_column"_a, "conditioner_columns"_a);
    m.def("monte_carlo_relative_band", &cvent::monte_carlo_relative_band, "n_samples"_a);

    py::class_<cvent::FockVector>(m, "FockVector")
        .def_readonly("modes", &cvent::FockVector::modes)
        .def_readonly("cutoff", &cvent::FockVector::cutoff)
        .def_readonly("amplitudes", &cvent::FockVector::amplitudes)
        .def_readonly("leakage", &cvent::FockVector::leakage)
        .def("norm", &cvent::FockVector::norm)
        .def("amplitude", py::overload_cast<std::size_t>(&cvent::FockVector::amplitude, py::const_), "n"_a)
        .def("amplitude", py::overload_cast<std::size_t, std::size_t>(&cvent::FockVector::amplitude, py::const_),
             "n_a"_a, "n_b"_a);
    m.def("fock_vacuum", &cvent::fock_vacuum, "modes"_a, "cutoff"_a = 12);
    m.def("fock_squeezed_vacuum", &cvent::fock_squeezed_vacuum, "gain"_a, "cutoff"_a = 12);
    m.def("fock_product", &cvent::fock_product, "first"_a, "second"_a);
    m.def("fock_beamsplitter", &cvent::fock_beamsplitter, "state"_a, "transmissivity"_a = 0.5,
          "max_leakage"_a = 1e-6);
    m.def("fock_quadrature_covariance", &cvent::fock_quadrature_covariance, "state"_a);

    m.def(
        "run_oracle_checks",
        [](std::uint64_t seed, std::size_t n_samples, double tolerance_scale) {
            return json_to_python(cvent::run_oracle_checks(seed, n_samples, tolerance_scale).to_json());
        },
        "seed"_a = 1, "n_samples"_a = 1000000, "tolerance_scale"_a = 1.0);

    // Figure datasets.
    m.def(
        "fig1",
        [](const std::string &range, bool decibels) {
            return dataset_to_dict(cvent::fig1_dataset(cvent::SweepRange::parse(range), decibels));
        },
        "range"_a = "0.01:1:100", "decibels"_a = false);
    m.def(
        "fig3",
        [](const std::string &range, bool decibels) {
            return dataset_to_dict(cvent::fig3_dataset(cvent::SweepRange::parse(range), decibels));
        },
        "range"_a = "0.01:1:100", "decibels"_a = false);
    m.def(
        "fig4",
        [](const std::string &range, double v_sqz) {
            return dataset_to_dict(cvent::fig4_dataset(cvent::SweepRange::parse(range), v_sqz));
        },
        "range"_a = "0.01:1:100", "v_sqz"_a = 0.1);
}
