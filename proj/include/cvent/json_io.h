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

#ifndef CVENT_JSON_IO_H
#define CVENT_JSON_IO_H

#include <nlohmann/json.hpp>

#include "cvent/entanglement.h"
#include "cvent/gaussian_state.h"
#include "cvent/protocols.h"
#include "cvent/teleportation.h"

namespace cvent {

// GaussianState: {"mode_count": M, "mean": [2M], "cov": [4M^2, row-major]}.
// Reports use the struct field names verbatim; an undefined lambda is null.

nlohmann::json state_to_json(const GaussianState &state);
/// Throws InvalidArgument on missing fields or inconsistent sizes, and the
/// usual GaussianState validation errors.
GaussianState state_from_json(const nlohmann::json &j);

void to_json(nlohmann::json &j, const EprReport &r);
void to_json(nlohmann::json &j, const GhzReport &r);
void to_json(nlohmann::json &j, const TeleportReport &r);
void to_json(nlohmann::json &j, const SqueezedInput &s);
void to_json(nlohmann::json &j, const EprRecipe &r);
void to_json(nlohmann::json &j, const GhzRecipe &r);

EprRecipe epr_recipe_from_json(const nlohmann::json &j);
GhzRecipe ghz_recipe_from_json(const nlohmann::json &j);

}  // namespace cvent

#endif
