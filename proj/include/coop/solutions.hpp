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

#include <optional>
#include <vector>

#include "coop/classes.hpp"
#include "coop/game.hpp"

namespace coop {

bool is_preimputation(const Game& g, const Allocation& x);
bool is_imputation(const Game& g, const Allocation& x);

struct ImputationSimplex {
    PlayerSet players;
    bool empty = false;
    std::vector<Allocation> vertices;
};

/// Vertices v^(i) = surplus * e_i + (singleton values); empty iff the
/// cooperative surplus is negative. Requires a non-negative game.
ImputationSimplex imputation_vertices(const Game& g);

/// Successive marginal contributions along a processing order of positions.
Allocation marginal_vector(const Game& g, const std::vector<int>& order0);
Allocation marginal_vector(const Game& g, const std::vector<std::string>& order);

bool core_contains(const Game& g, const Allocation& x);
bool core_is_empty(const Game& g);

struct CoreDescription {
    PlayerSet players;
    bool empty = false;
    Rational lp_value;
    std::optional<std::vector<Allocation>> vertices;        // convex games only
    std::optional<Allocation> point;                        // a core point when non-empty
    std::vector<std::pair<Coalition, Rational>> collection; // violating weights when empty
};

/// H-form summary with an LP certificate either way.
CoreDescription core_description(const Game& g);

/// V-form for convex non-negative games: the deduplicated marginal vectors
/// over all n! orders, each re-validated against the H-form. n <= 8.
CoreDescription core_vertices_convex(const Game& g);

/// Shapley value via the Mobius form: phi_j = sum_{S owning j} mu_S / |S|.
Allocation shapley(const Game& g);

/// Oracle route: the average of the marginal vectors over all n! orders.
Allocation shapley_by_permutations(const Game& g);

/// Composite-game Shapley formula for normalized components; equals
/// shapley(partial_compose(ga, i, gb)) exactly.
Allocation composite_shapley(const Game& ga, int pos1, const Game& gb);

/// Banzhaf index, derivative form: psi_i = 2^(1-n) sum_{S avoiding i} d_i v(S).
Allocation banzhaf(const Game& g);

/// The linear map u_S -> 2^(1-n) 1^S; differs from the derivative form off
/// the grand coalition.
Allocation banzhaf_unanimity_scaled(const Game& g);

enum class BanzhafVariant { standard, unanimity_scaled };

/// Right-hand side of the composite-Banzhaf identity,
/// psi(ga) tensor_i phi(gb) optionally divided by 2^(|B|-1); exposed as a
/// checkable quantity rather than an unconditional law.
Allocation composite_banzhaf_rhs(const Game& ga, int pos1, const Game& gb,
                                 BanzhafVariant variant = BanzhafVariant::standard,
                                 bool with_divisor = false);

} // namespace coop
