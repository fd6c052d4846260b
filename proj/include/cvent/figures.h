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

#ifndef CVENT_FIGURES_H
#define CVENT_FIGURES_H

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace cvent {

/// Evenly spaced sweep, "lo:hi:n" on the command line.
struct SweepRange {
    double lo = 0;
    double hi = 1;
    std::size_t steps = 2;

    /// Throws InvalidArgument on malformed text, lo >= hi or steps < 2.
    static SweepRange parse(std::string_view text);
    void validate() const;
    /// Additionally requires the range to lie within (0, 1].
    void validate_unit_interval(const char *what) const;
    std::vector<double> points() const;
};

/// Columns of a figure dataset; every row has one value per column.
struct Dataset {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    /// Header row plus rows at 6 significant digits.
    void write_csv(std::ostream &out) const;
    nlohmann::json to_json() const;
};

/// Fixed-precision number formatting shared by every CSV writer.
std::string format_number(double v);

/// Squeezed variance s -> conditional variance product for two orthogonally
/// squeezed beams (both at s) and for a single squeezed beam plus vacuum.
/// Columns: s, product_two_beams, product_one_beam.
Dataset fig1_dataset(const SweepRange &range, bool decibels = false);

/// Coherent-signal fidelity with single-squeezer entanglement, with unit
/// parametric gain and with the symmetrizing gain.
/// Columns: s, f_no_opa, f_opa.
Dataset fig3_dataset(const SweepRange &range, bool decibels = false);

/// Squeezed-signal fidelity with unbiased entanglement V1+ = V2- = v, with
/// unit gain and with the optimal gain G = v_sqz. Columns: v, f_no_opa, f_opa.
Dataset fig4_dataset(const SweepRange &range, double v_sqz = 0.1);

/// Fidelity over parametric gains for a fixed resource and signal.
/// Columns: v1_plus, v2_minus, gain, v_sqz, fidelity.
Dataset fidelity_gain_sweep(double v1_plus, double v2_minus, double v_sqz, const SweepRange &gains);

/// -10 log10(s).
double squeezing_db(double s);

}  // namespace cvent

#endif
