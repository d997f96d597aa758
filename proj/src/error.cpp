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

#include "coop/error.hpp"

namespace coop {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::duplicate_label: return "DuplicateLabel";
    case Errc::unknown_player: return "UnknownPlayer";
    case Errc::unknown_player_in_coalition: return "UnknownPlayerInCoalition";
    case Errc::nonzero_empty_set_when_grounded: return "NonzeroEmptySetWhenGrounded";
    case Errc::unparsable_rational: return "UnparsableRational";
    case Errc::empty_support: return "EmptySupport";
    case Errc::empty_support_for_grounded_game: return "EmptySupportForGroundedGame";
    case Errc::negative_weight: return "NegativeWeight";
    case Errc::empty_derivative_set: return "EmptyDerivativeSet";
    case Errc::not_a_permutation: return "NotAPermutation";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::label_collision: return "LabelCollision";
    case Errc::arity_mismatch: return "ArityMismatch";
    case Errc::not_simple: return "NotSimple";
    case Errc::not_monotone: return "NotMonotone";
    case Errc::not_normalized: return "NotNormalized";
    case Errc::bad_k: return "BadK";
    case Errc::size_cap: return "SizeCap";
    case Errc::negative_game: return "NegativeGame";
    case Errc::not_convex: return "NotConvex";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::variable_collision: return "VariableCollision";
    case Errc::malformed_program: return "MalformedProgram";
    case Errc::parse_error: return "ParseError";
    case Errc::internal: return "Internal";
    }
    return "Unknown";
}

void fail(Errc code, const std::string& message) {
    throw Error(code, std::string(errc_name(code)) + ": " + message);
}

} // namespace coop
