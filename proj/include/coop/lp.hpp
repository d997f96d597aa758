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

#include <variant>
#include <vector>

#include "coop/rational.hpp"

namespace coop {

enum class Relation { ge, eq };

struct LinearConstraint {
    std::vector<Rational> coeffs;
    Relation rel = Relation::ge;
    Rational rhs;
};

/// Exact rational LP in >=/= constraint form. Variables are free (sign
/// unrestricted) unless nonneg_vars is set; the objective is always
/// minimized.
struct LinearProgram {
    int num_vars = 0;
    std::vector<LinearConstraint> constraints;
    std::vector<Rational> objective;
    bool nonneg_vars = false;
};

struct LpOptimal {
    Rational value;
    std::vector<Rational> point;
};
struct LpInfeasible {};
struct LpUnbounded {};

using LpOutcome = std::variant<LpOptimal, LpInfeasible, LpUnbounded>;

inline bool is_optimal(const LpOutcome& o) { return std::holds_alternative<LpOptimal>(o); }
inline bool is_infeasible(const LpOutcome& o) { return std::holds_alternative<LpInfeasible>(o); }
inline bool is_unbounded(const LpOutcome& o) { return std::holds_alternative<LpUnbounded>(o); }
inline const LpOptimal& optimal(const LpOutcome& o) { return std::get<LpOptimal>(o); }

/// Dense two-phase tableau simplex over exact rationals with Bland's
/// anti-cycling rule; deterministic, terminates on every input.
LpOutcome solve(const LinearProgram& lp);

} // namespace coop
