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

#include "cvent/figures.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "cvent/entanglement.h"
#include "cvent/errors.h"
#include "cvent/protocols.h"
#include "cvent/teleportation.h"

namespace cvent {

namespace {

double parse_double(std::string_view text) {
    std::string s(text);
    char *end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
        throw InvalidArgument("not a number: '" + s + "'");
    }
    return v;
}

std::string x_column(const char *name, bool decibels) {
    return decibels ? "squeezing_db" : name;
}

double x_value(double s, bool decibels) {
    return decibels ? squeezing_db(s) : s;
}

}  // namespace

SweepRange SweepRange::parse(std::string_view text) {
    auto first = text.find(':');
    auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
    if (first == std::string_view::npos || second == std::string_view::npos ||
        text.find(':', second + 1) != std::string_view::npos) {
        throw InvalidArgument("range must look like lo:hi:n");
    }
    SweepRange r;
    r.lo = parse_double(text.substr(0, first));
    r.hi = parse_double(text.substr(first + 1, second - first - 1));
    std::string_view steps = text.substr(second + 1);
    unsigned long long n = 0;
    auto [ptr, ec] = std::from_chars(steps.data(), steps.data() + steps.size(), n);
    if (ec != std::errc() || ptr != steps.data() + steps.size()) {
        throw InvalidArgument("range step count must be a non-negative integer");
    }
    r.steps = static_cast<std::size_t>(n);
    r.validate();
    return r;
}

void SweepRange::validate() const {
    if (!(lo < hi)) {
        throw InvalidArgument("range needs lo < hi");
    }
    if (steps < 2) {
        throw InvalidArgument("range needs at least two steps");
    }
}

void SweepRange::validate_unit_interval(const char *what) const {
    validate();
    if (!(lo > 0) || hi > 1) {
        throw InvalidArgument(std::string(what) + " range must lie within (0, 1]");
    }
}

std::vector<double> SweepRange::points() const {
    validate();
    std::vector<double> out;
    out.reserve(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        // Endpoints are exact.
        out.push_back(i + 1 == steps ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1));
    }
    return out;
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void Dataset::write_csv(std::ostream &out) const {
    for (std::size_t c = 0; c < columns.size(); ++c) {
        out << (c ? "," : "") << columns[c];
    }
    out << "\n";
    for (const auto &row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c ? "," : "") << format_number(row[c]);
        }
        out << "\n";
    }
}

nlohmann::json Dataset::to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &row : rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t c = 0; c < columns.size(); ++c) {
            obj[columns[c]] = row[c];
        }
        out.push_back(obj);
    }
    return out;
}

double squeezing_db(double s) {
    return -10 * std::log10(s);
}

Dataset fig1_dataset(const SweepRange &range, bool decibels) {
    range.validate_unit_interval("squeezed variance");
    Dataset d{{x_column("s", decibels), "product_two_beams", "product_one_beam"}, {}};
    for (double s : range.points()) {
        double two = epr_product(make_epr_pair(EprRecipe::two_squeezers(s)), 0, 1).product;
        double one = epr_product(make_epr_pair(EprRecipe::single_squeezer(s)), 0, 1).product;
        d.rows.push_back({x_value(s, decibels), two, one});
    }
    return d;
}

Dataset fig3_dataset(const SweepRange &range, bool decibels) {
    range.validate_unit_interval("squeezed variance");
    Dataset d{{x_column("s", decibels), "f_no_opa", "f_opa"}, {}};
    for (double s : range.points()) {
        EprRecipe recipe = EprRecipe::single_squeezer(s);
        double v1_plus = recipe.beam1.v_plus;
        double v2_minus = recipe.beam2.v_minus;
        double gain = symmetrizing_gain(recipe.beam1.v_minus, recipe.beam2.v_plus);
        d.rows.push_back({x_value(s, decibels), coherent_fidelity(v1_plus, v2_minus, 1).fidelity,
                          coherent_fidelity(v1_plus, v2_minus, gain).fidelity});
    }
    return d;
}

Dataset fig4_dataset(const SweepRange &range, double v_sqz) {
    range.validate_unit_interval("resource variance");
    if (!(v_sqz > 0)) {
        throw InvalidArgument("signal squeezed variance must be positive");
    }
    Dataset d{{"v", "f_no_opa", "f_opa"}, {}};
    for (double v : range.points()) {
        d.rows.push_back({v, squeezed_signal_fidelity(v, v, 1, v_sqz).fidelity,
                          squeezed_signal_fidelity(v, v, v_sqz, v_sqz).fidelity});
    }
    return d;
}

Dataset fidelity_gain_sweep(double v1_plus, double v2_minus, double v_sqz, const SweepRange &gains) {
    gains.validate();
    if (!(gains.lo > 0)) {
        throw InvalidArgument("parametric gains must be positive");
    }
    Dataset d{{"v1_plus", "v2_minus", "gain", "v_sqz", "fidelity"}, {}};
    for (double g : gains.points()) {
        d.rows.push_back({v1_plus, v2_minus, g, v_sqz, squeezed_signal_fidelity(v1_plus, v2_minus, g, v_sqz).fidelity});
    }
    return d;
}

}  // namespace cvent
