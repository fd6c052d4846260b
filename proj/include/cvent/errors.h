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

#ifndef CVENT_ERRORS_H
#define CVENT_ERRORS_H

#include <stdexcept>
#include <string>

namespace cvent {

/// Bad caller input: out-of-range index, non-positive gain, malformed recipe.
class InvalidArgument : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A state that violates physicality (non-PSD covariance, uncertainty bound)
/// or a precondition on purity.
class InvalidState : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Homodyne measurement of a quadrature with (numerically) zero variance.
class DegenerateMeasurement : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Conditioning block of a Schur complement or regression is singular.
class DegenerateConditioner : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Fock truncation lost more norm than the oracle tolerates.
class CutoffTooSmall : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace cvent

#endif
