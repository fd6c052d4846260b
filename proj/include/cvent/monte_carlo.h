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

#ifndef CVENT_MONTE_CARLO_H
#define CVENT_MONTE_CARLO_H

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cvent/gaussian_state.h"

namespace cvent {

/// Rows are i.i.d. draws of the quadrature vector; columns follow the state's
/// interleaved ordering and are labelled "X1+", "X1-", "X2+", ...
struct SampleMatrix {
    std::vector<std::string> columns;
    Eigen::MatrixXd data;
    std::uint64_t seed = 0;

    std::size_t n_samples() const { return static_cast<std::size_t>(data.rows()); }
    std::size_t column_index(std::size_t mode, Quadrature q) const { return quadrature_index(mode, q); }
    /// Unbiased sample covariance of all columns.
    Eigen::MatrixXd sample_cov() const;
    void write_csv(std::ostream &out) const;
};

/// Rows per independently seeded shard.
constexpr std::size_t kSampleShardSize = 65536;

/// Draws `n_samples` from N(mean, cov). Shard k uses engine stream k of
/// `seed`, so the matrix is identical however the shards are scheduled.
/// Throws InvalidArgument for n_samples < 2 and InvalidState for a covariance
/// that is not positive semi-definite.
SampleMatrix sample_quadratures(const GaussianState &state, std::size_t n_samples, std::uint64_t seed);

/// Residual variance of the least-squares regression (with intercept) of the
/// target column on the conditioner columns, normalized by n - k - 1.
/// Throws DegenerateConditioner when the regressors are rank deficient.
double estimate_conditional_variance(const SampleMatrix &samples, std::size_t target_column,
                                     std::span<const std::size_t> conditioner_columns);

/// Constant k in the acceptance band |est - exact| / exact < 3 sqrt(2/n) k.
constexpr double kMonteCarloBandConstant = 4.0 / 3.0;

double monte_carlo_relative_band(std::size_t n_samples);

}  // namespace cvent

#endif
