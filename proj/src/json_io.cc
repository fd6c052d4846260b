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

#include "cvent/json_io.h"

#include <string>
#include <vector>

#include "cvent/errors.h"

namespace cvent {

using nlohmann::json;

namespace {

const json &field(const json &j, const char *name) {
    if (!j.is_object() || !j.contains(name)) {
        throw InvalidArgument(std::string("missing JSON field '") + name + "'");
    }
    return j.at(name);
}

double number(const json &j, const char *name) {
    const json &v = field(j, name);
    if (!v.is_number()) {
        throw InvalidArgument(std::string("JSON field '") + name + "' must be a number");
    }
    return v.get<double>();
}

json optional_number(const std::optional<double> &v) {
    return v ? json(*v) : json(nullptr);
}

SqueezedInput input_from_json(const json &j) {
    SqueezedInput s{number(j, "v_plus"), j.contains("v_minus") ? number(j, "v_minus") : 0.0};
    if (!j.contains("v_minus")) {
        s = SqueezedInput::pure(s.v_plus);
    }
    return s;
}

}  // namespace

json state_to_json(const GaussianState &state) {
    std::vector<double> mean(state.mean().data(), state.mean().data() + state.mean().size());
    std::vector<double> cov;
    for (Eigen::Index r = 0; r < state.cov().rows(); ++r) {
        for (Eigen::Index c = 0; c < state.cov().cols(); ++c) {
            cov.push_back(state.cov()(r, c));
        }
    }
    return json{{"mode_count", state.mode_count()}, {"mean", mean}, {"cov", cov}};
}

GaussianState state_from_json(const json &j) {
    const json &m = field(j, "mode_count");
    if (!m.is_number_integer() || m.get<long long>() < 1) {
        throw InvalidArgument("mode_count must be a positive integer");
    }
    auto modes = m.get<std::size_t>();
    const json &mean = field(j, "mean");
    const json &cov = field(j, "cov");
    if (!mean.is_array() || mean.size() != 2 * modes) {
        throw InvalidArgument("mean must be an array of length 2*mode_count");
    }
    if (!cov.is_array() || cov.size() != 4 * modes * modes) {
        throw InvalidArgument("cov must be a row-major array of length (2*mode_count)^2");
    }
    const auto dim = static_cast<Eigen::Index>(2 * modes);
    Eigen::VectorXd mu(dim);
    Eigen::MatrixXd sigma(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        mu(i) = mean.at(static_cast<std::size_t>(i)).get<double>();
        for (Eigen::Index k = 0; k < dim; ++k) {
            sigma(i, k) = cov.at(static_cast<std::size_t>(i * dim + k)).get<double>();
        }
    }
    return GaussianState(std::move(mu), std::move(sigma));
}

void to_json(json &j, const EprReport &r) {
    j = json{{"mode_a", r.mode_a},
             {"mode_b", r.mode_b},
             {"vcv_plus", r.vcv_plus},
             {"vcv_minus", r.vcv_minus},
             {"product", r.product},
             {"entangled", r.entangled},
             {"reverse_vcv_plus", r.reverse_vcv_plus},
             {"reverse_vcv_minus", r.reverse_vcv_minus},
             {"symmetric_vcv_plus", r.symmetric_vcv_plus},
             {"symmetric_vcv_minus", r.symmetric_vcv_minus},
             {"n_epr_a", r.n_epr_a},
             {"n_epr_b", r.n_epr_b},
             {"n_maximal", r.n_maximal},
             {"lambda", optional_number(r.lambda)}};
}

void to_json(json &j, const GhzReport &r) {
    j = json{{"target", r.target},
             {"other_a", r.other_a},
             {"other_b", r.other_b},
             {"vcv3_plus", r.vcv3_plus},
             {"vcv3_minus", r.vcv3_minus},
             {"product", r.product},
             {"violation", r.violation},
             {"expanded_vcv3_plus", r.expanded_vcv3_plus},
             {"expanded_vcv3_minus", r.expanded_vcv3_minus},
             {"expanded_product", r.expanded_product},
             {"unbiased", r.unbiased},
             {"n_target", r.n_target},
             {"n_maximal", r.n_maximal},
             {"lambda", optional_number(r.lambda)}};
}

void to_json(json &j, const TeleportReport &r) {
    j = json{{"v_out_plus", r.v_out_plus},
             {"v_out_minus", r.v_out_minus},
             {"fidelity", r.fidelity},
             {"parametric_gain", r.parametric_gain},
             {"v_sqz", r.v_sqz},
             {"feedforward_unity", r.feedforward_unity},
             {"beats_classical", r.beats_classical}};
}

void to_json(json &j, const SqueezedInput &s) {
    j = json{{"v_plus", s.v_plus}, {"v_minus", s.v_minus}};
}

void to_json(json &j, const EprRecipe &r) {
    j = json{{"beam1", r.beam1}, {"beam2", r.beam2}};
}

void to_json(json &j, const GhzRecipe &r) {
    j = json{{"beams", json::array({r.beams[0], r.beams[1], r.beams[2]})}};
}

EprRecipe epr_recipe_from_json(const json &j) {
    EprRecipe r{input_from_json(field(j, "beam1")), input_from_json(field(j, "beam2"))};
    r.validate();
    return r;
}

GhzRecipe ghz_recipe_from_json(const json &j) {
    const json &beams = field(j, "beams");
    if (!beams.is_array() || beams.size() != 3) {
        throw InvalidArgument("GHZ recipe needs exactly three beams");
    }
    GhzRecipe r{{input_from_json(beams[0]), input_from_json(beams[1]), input_from_json(beams[2])}};
    r.validate();
    return r;
}

}  // namespace cvent
