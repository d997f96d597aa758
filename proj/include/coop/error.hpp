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

#include <stdexcept>
#include <string>

namespace coop {

enum class Errc {
    duplicate_label,
    unknown_player,
    unknown_player_in_coalition,
    nonzero_empty_set_when_grounded,
    unparsable_rational,
    empty_support,
    empty_support_for_grounded_game,
    negative_weight,
    empty_derivative_set,
    not_a_permutation,
    index_out_of_range,
    label_collision,
    arity_mismatch,
    not_simple,
    not_monotone,
    not_normalized,
    bad_k,
    size_cap,
    negative_game,
    not_convex,
    dimension_mismatch,
    variable_collision,
    malformed_program,
    parse_error,
    internal,
};

const char* errc_name(Errc code);

/// Library-wide exception type; carries one of the Errc codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

} // namespace coop
