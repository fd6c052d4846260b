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

#include "cvent/monte_carlo.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <ostream>
#include <random>
#include <thread>
#include <vector>

#include "cvent/errors.h"
#include "cvent/rng.h"

namespace cvent {

Eigen::MatrixXd SampleMatrix::sample_cov() const {
    Eigen::MatrixXd centered = data.rowwise() - data.colwise().mean();
    return centered.transpose() * centered / static_cast<double>(data.rows() - 1);
}

void SampleMatrix::write_csv(std::ostream &out) const {
    for (std::size_t c = 0; c < columns.size(); ++c) {
        out << (c ? "," : "") << columns[c];
    }
    out << "\n";
    char buf[32];
    for (Eigen::Index r = 0; r < data.rows(); ++r) {
        for (Eigen::Index c = 0; c < data.cols(); ++c) {
            std::snprintf(buf, sizeof(buf), "%.17g", data(r, c));
            out << (c ? "," : "") << buf;
        }
        out << "\n";
    }
}

SampleMatrix sample_quadratures(const GaussianState &state, std::size_t n_samples, std::uint64_t seed) {
    if (n_samples < 2) {
        throw InvalidArgument("need at least two samples");
    }
    const Eigen::Index dim = state.mean().size();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(state.cov());
    double scale = std::max(1.0, state.cov().cwiseAbs().maxCoeff());
    if (eig.eigenvalues().minCoeff() < -kPhysicalityTolerance * scale) {
        throw InvalidState("covariance is not positive semi-definite");
    }
    // Symmetric square root; tolerates singular (perfectly correlated) covariances.
    Eigen::MatrixXd root = eig.eigenvectors() * eig.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
                           eig.eigenvectors().transpose();

    SampleMatrix out;
    out.seed = seed;
    for (std::size_t m = 0; m < state.mode_count(); ++m) {
        out.columns.push_back("X" + std::to_string(m + 1) + "+");
        out.columns.push_back("X" + std::to_string(m + 1) + "-");
    }
    out.data.resize(static_cast<Eigen::Index>(n_samples), dim);

    const std::size_t shards = (n_samples + kSampleShardSize - 1) / kSampleShardSize;
    auto fill_shard = [&](std::size_t shard) {
        auto engine = make_engine(seed, shard);
        std::normal_distribution<double> normal(0.0, 1.0);
        std::size_t begin = shard * kSampleShardSize;
        std::size_t end = std::min(n_samples, begin + kSampleShardSize);
        Eigen::VectorXd z(dim);
        for (std::size_t r = begin; r < end; ++r) {
            for (Eigen::Index k = 0; k < dim; ++k) {
                z(k) = normal(engine);
            }
            out.data.row(static_cast<Eigen::Index>(r)) = (state.mean() + root * z).transpose();
        }
    };
    std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), shards));
    if (workers == 1) {
        for (std::size_t s = 0; s < shards; ++s) {
            fill_shard(s);
        }
    } else {
        std::vector<std::future<void>> jobs;
        for (std::size_t w = 0; w < workers; ++w) {
            jobs.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t s = w; s < shards; s += workers) {
                    fill_shard(s);
                }
            }));
        }
        for (auto &j : jobs) {
            j.get();
        }
    }
    return out;
}

double estimate_conditional_variance(const SampleMatrix &samples, std::size_t target_column,
                                     std::span<const std::size_t> conditioner_columns) {
    const auto cols = static_cast<std::size_t>(samples.data.cols());
    if (target_column >= cols) {
        throw InvalidArgument("target column out of range");
    }
    for (std::size_t c : conditioner_columns) {
        if (c >= cols) {
            throw InvalidArgument("conditioner column out of range");
        }
        if (c == target_column) {
            throw InvalidArgument("target column cannot be a conditioner");
        }
    }
    const std::size_t n = samples.n_samples();
    const std::size_t k = conditioner_columns.size();
    if (n <= k + 1) {
        throw InvalidArgument("need more samples than regressors plus one");
    }
    Eigen::MatrixXd design(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k + 1));
    design.col(0).setOnes();
    for (std::size_t j = 0; j < k; ++j) {
        design.col(static_cast<Eigen::Index>(j + 1)) = samples.data.col(static_cast<Eigen::Index>(conditioner_columns[j]));
    }
    Eigen::VectorXd y = samples.data.col(static_cast<Eigen::Index>(target_column));
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    qr.setThreshold(1e-10);
    if (qr.rank() < static_cast<Eigen::Index>(k + 1)) {
        throw DegenerateConditioner("regressors are rank deficient");
    }
    Eigen::VectorXd beta = qr.solve(y);
    Eigen::VectorXd residual = y - design * beta;
    return residual.squaredNorm() / static_cast<double>(n - k - 1);
}

double monte_carlo_relative_band(std::size_t n_samples) {
    return 3 * std::sqrt(2.0 / static_cast<double>(n_samples)) * kMonteCarloBandConstant;
}

}  // namespace cvent
