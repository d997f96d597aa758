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

#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "coop/game.hpp"
#include "coop/lp.hpp"

namespace coop {

/// Concrete evidence for a failed predicate, re-checkable by evaluating the
/// game at the recorded coalitions.
struct Witness {
    std::string kind;                  // "value" | "pair" | "derivative" | "lp-gap"
    std::vector<Coalition> coalitions; // involved coalitions
    std::vector<Rational> values;      // their relevant values
    std::vector<std::pair<Coalition, Rational>> collection; // balanced collection weights
    std::string note;
};

bool is_normalized(const Game& g, Witness* w = nullptr);
bool is_nonnegative(const Game& g, Witness* w = nullptr);
bool is_monotone(const Game& g, Witness* w = nullptr);
bool is_capacity(const Game& g, Witness* w = nullptr);
bool is_simple(const Game& g, Witness* w = nullptr);
bool is_additive(const Game& g, Witness* w = nullptr);

/// All iterated derivatives of orders 2..min(k, n) are non-negative.
bool is_k_monotone(const Game& g, int k, Witness* w = nullptr);
/// 2-monotonicity, i.e. supermodularity.
bool is_convex(const Game& g, Witness* w = nullptr);
/// All iterated derivatives of orders 2..min(k, n) are non-positive;
/// equivalently the dual game is k-monotone (checked as an invariant).
bool is_k_alternating(const Game& g, int k, Witness* w = nullptr);
bool is_totally_monotone(const Game& g, Witness* w = nullptr);
bool is_totally_alternating(const Game& g, Witness* w = nullptr);

/// The two core LPs behind Bondareva-Shapley. The primal minimizes x(N)
/// subject to x(S) >= v(S); its dual maximizes sum y_S v(S) over weight
/// systems with sum_{S owning i} y_S = 1, y >= 0.
LinearProgram core_lp(const Game& g);
LinearProgram core_lp_dual(const Game& g);

struct BalancedResult {
    bool balanced = false;
    Rational lp_value;                                      // optimum, always >= v(N)
    std::optional<Allocation> core_point;                   // when balanced
    std::vector<std::pair<Coalition, Rational>> collection; // violating weights otherwise
};

/// Decides balancedness exactly (via the dual core LP, n <= 12) and returns
/// a certificate either way: a core point or a violating balanced collection.
BalancedResult balanced_certificate(const Game& g);
bool is_balanced(const Game& g, Witness* w = nullptr);

struct ClassReport {
    bool grounded = false;
    bool normalized = false;
    bool nonnegative = false;
    bool monotone = false;
    bool simple = false;
    bool additive = false;
    bool capacity = false;
    bool convex = false;
    std::map<int, bool> k_monotone;
    std::map<int, bool> k_alternating;
    bool totally_monotone = false;
    bool totally_alternating = false;
    std::optional<bool> balanced; // unset when past the LP size cap
    std::map<std::string, Witness> witnesses;
};

/// Runs every predicate; k-indexed families go up to min(kmax, n).
ClassReport analyze(const Game& g, int kmax = 4);

// Seeded in-class random generators used by closure tests.
namespace gen {

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng, int lo = -4, int hi = 4);
Rational random_nonneg_rational(Rng& rng, int hi = 4);

/// Uniform random grounded game with small rational values.
Game random_game(Rng& rng, int n, bool grounded = true);
Game random_normalized(Rng& rng, int n);
Game random_simple_monotone(Rng& rng, int n);
/// Monotone sweep: each value is the max over parents plus a non-negative
/// increment.
Game random_capacity(Rng& rng, int n);
/// Lattice sweep keeping every second difference non-negative.
Game random_convex_nonneg(Rng& rng, int n);
/// Non-negative Mobius coefficients, then Zeta.
Game random_totally_monotone(Rng& rng, int n);
/// Totally monotone base plus high-order noise, rejection-filtered by the
/// predicate.
Game random_k_monotone_nonneg(Rng& rng, int n, int k);
/// Dual of a random non-negative k-monotone game.
Game random_k_alternating_capacity(Rng& rng, int n, int k);
/// Additive game perturbed downward off the grand coalition, clamped to
/// stay monotone; the additive vector stays in the core.
Game random_balanced_capacity(Rng& rng, int n);
Allocation random_allocation(Rng& rng, const PlayerSet& players, bool nonneg = false);

} // namespace gen

} // namespace coop
