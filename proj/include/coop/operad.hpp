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

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "coop/game.hpp"

namespace coop {

// Insertion positions are 1-based throughout, matching the usual operadic
// indexing: composing at position i of an n-ary game requires 1 <= i <= n.

/// Composition of coalitions: S over n positions, T over m positions.
/// If i is in S the members of T take its place; otherwise S is re-indexed.
Coalition coalition_compose(Coalition s, int pos1, Coalition t, int n, int m);

/// Player set of a composite: A-before-i ++ B ++ A-after-i. When a label of
/// B already occurs in A minus the replaced player, all of B's labels are
/// prefixed with "<replaced label>.".
PlayerSet compose_player_sets(const PlayerSet& a, int pos1, const PlayerSet& b);

/// Partial composition of games. On grounded games the composite value is
///   (a o_i b)(S) = b(B) a(S_A) + d_i a(S_A) b(S_B).
/// The general (non-grounded) form rescales by b(B) - b(empty) instead of
/// b(B); the two agree on grounded inputs, and composing with the 0-player
/// game that is 1 on the empty set yields the derivative at i.
Game partial_compose(const Game& ga, int pos1, const Game& gb);
Game partial_compose(const Game& ga, std::string_view player, const Game& gb);

/// Alias kept for the non-grounded reading; accepts 0-player components.
Game partial_compose_nongrounded(const Game& ga, int pos1, const Game& gb);

/// Composition in the unanimity basis: u_S o_i u_T = u_{S <> T}.
/// Exactly intertwined with partial_compose by the Mobius transform.
MobiusGame partial_compose_unanimity(const MobiusGame& ma, int pos1, const MobiusGame& mb);

/// Iterated partial composition filling every input of the quotient.
Game total_compose(const Game& g0, const std::vector<Game>& components);

/// Partial tensor product of payoff vectors; the vector-level image of the
/// composition of additive games.
Allocation partial_tensor(const Allocation& x, int pos1, const Allocation& y);

// The generator games on canonically labelled players.
Game bargaining();           // B   = u_{1,2}
Game dictator(int k);        // d_k = u_{k}, k in {1,2}
Game dual_bargaining();      // B*  = d_1 + d_2 - B
Game trivial_one();          // the unit: 1-player normalized grounded game
Game zero_player_unit();     // v_empty: the 0-player game equal to 1 on {}

/// Shapley's product and sum: (B o_1 g1) o g2 and (B* o_1 g1) o g2.
Game shapley_product(const Game& g1, const Game& g2);
Game shapley_sum(const Game& g1, const Game& g2);

/// Shapley's compound of simple games: a coalition wins when the set of
/// quotient players it controls is winning in the quotient.
Game simple_compound(const Game& g0, const std::vector<Game>& components);

/// Owen's tensor composition of normalized components into a quotient.
Game owen_tensor_composition(const Game& g0, const std::vector<Game>& components);

/// Expression tree over the generator games, composed with o_i nodes.
class GeneratorExpr {
public:
    enum class Token { bargaining, dictator1, dictator2, one, vempty };

    static GeneratorExpr leaf(Token token);
    static GeneratorExpr comp(GeneratorExpr left, int pos1, GeneratorExpr right);

    bool is_leaf() const { return node_->leaf; }
    Token token() const;
    GeneratorExpr left() const;
    GeneratorExpr right() const;
    int position() const;
    int arity() const { return node_->arity; }

    /// Evaluates to a game on canonical labels "1".."arity()".
    Game evaluate() const;

    std::string to_sexpr() const;
    static GeneratorExpr parse_sexpr(std::string_view text);

private:
    struct Node;
    explicit GeneratorExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    struct Node {
        bool leaf = true;
        Token token = Token::bargaining;
        std::shared_ptr<const Node> lhs, rhs;
        int pos1 = 0;
        int arity = 0;
    };
    std::shared_ptr<const Node> node_;
};

/// Writes u_S on n players as compositions of B, d_1, d_2 and the unit,
/// extending player by player; the returned game is the evaluation and
/// always equals unanimity([n], S).
std::pair<GeneratorExpr, Game> build_unanimity_from_generators(int n, Coalition s);

struct AxiomIssue {
    std::string axiom;
    std::string detail;
    Coalition coalition = 0;
    std::string lhs, rhs;
};

struct AxiomReport {
    bool sequential = true;
    bool parallel = true;
    bool unit = true;
    bool equivariance_inner = true;
    bool equivariance_outer = true;
    std::vector<AxiomIssue> issues;

    bool all_passed() const {
        return sequential && parallel && unit && equivariance_inner && equivariance_outer;
    }
};

/// Checks the unital partial operad axioms on a concrete triple:
/// sequential at (i, j), parallel at (i, k) with i < k, the unit laws, and
/// both equivariance compatibilities (over all permutations at small arity).
AxiomReport check_operad_axioms(const Game& lambda, const Game& mu, const Game& nu,
                                int i, int j, int k);

} // namespace coop
