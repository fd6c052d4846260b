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

#ifndef CVENT_VERIFY_H
#define CVENT_VERIFY_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace cvent {

struct CheckResult {
    std::string name;
    double value = 0;
    double expected = 0;
    /// Absolute deviation allowed (relative for Monte-Carlo checks, see
    /// `relative`).
    double tolerance = 0;
    bool relative = false;
    bool pass = false;
};

struct VerifySummary {
    std::uint64_t seed = 0;
    std::size_t n_samples = 0;
    std::vector<CheckResult> checks;

    bool passed() const;
    nlohmann::json to_json() const;
};

/// Runs every oracle cross-check: Monte-Carlo regression estimates of
/// conditional variances against the Schur complements, and Fock-space
/// covariances and amplitudes against the Gaussian engine. Every tolerance
/// is multiplied by `tolerance_scale`.
VerifySummary run_oracle_checks(std::uint64_t seed, std::size_t n_samples, double tolerance_scale = 1.0);

}  // namespace cvent

#endif
