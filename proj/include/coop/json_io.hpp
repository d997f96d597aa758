// Copyright 2026 The coopgames authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include <json.hpp>

#include "coop/classes.hpp"
#include "coop/game.hpp"
#include "coop/solutions.hpp"

namespace coop {

using json = nlohmann::json;

// Game files: {"players": [...], "grounded": bool,
//              "values": {"": "0", "a1": "1", "a1,a2": "3"}}
// Keys are comma-joined label sets; omitted coalitions default to "0".
json game_to_json(const Game& g);
Game game_from_json(const json& j);
std::string game_to_text(const Game& g, int indent = 2);
Game game_from_text(std::string_view text);

// Unanimity-basis files carry "coeffs" instead of "values".
json mobius_to_json(const MobiusGame& m);
MobiusGame mobius_from_json(const json& j);
bool looks_like_mobius(const json& j);

json allocation_to_json(const Allocation& x);

json imputation_simplex_to_json(const ImputationSimplex& s);
json core_description_to_json(const CoreDescription& c);
json witness_to_json(const Witness& w, const PlayerSet& players);
json class_report_to_json(const ClassReport& r, const PlayerSet& players);

} // namespace coop
