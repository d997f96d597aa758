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

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "coop/error.hpp"
#include "coop/rational.hpp"

namespace coop {

/// Coalitions are bitmasks over player positions: bit k set means the player
/// at position k (0-based) is a member.
using Coalition = std::uint32_t;

inline int coalition_size(Coalition s) { return std::popcount(s); }

/// Packs the bits of `mask` that fall on positions of `keep` into a
/// contiguous low-bit mask, preserving order. Inverse of unpack_bits.
Coalition pack_bits(Coalition mask, Coalition keep);
Coalition unpack_bits(Coalition packed, Coalition keep);

/// Size cap for player sets; the dense 2^n tables make memory the binding
/// constraint. Overridable via the COOP_MAX_PLAYERS environment variable.
int max_players();

/// Ordered set of distinct player labels. Order is significant: positions
/// are 1..n in the public operations, bits 0..n-1 internally.
class PlayerSet {
public:
    PlayerSet() = default;
    explicit PlayerSet(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int pos0) const;

    /// 0-based position of a label, or -1 when absent.
    int position(std::string_view label) const;
    int require_position(std::string_view label) const;
    bool contains(std::string_view label) const { return position(label) >= 0; }

    Coalition full_coalition() const {
        return size() == 0 ? 0 : static_cast<Coalition>((1u << size()) - 1u);
    }
    std::uint64_t num_coalitions() const { return std::uint64_t{1} << size(); }

    /// Coalition from member labels; throws unknown_player_in_coalition.
    Coalition coalition(const std::vector<std::string>& members) const;
    /// Coalition from a comma-joined label list ("" is the empty coalition).
    Coalition coalition_from_key(std::string_view key) const;
    /// Comma-joined member labels in player order.
    std::string coalition_key(Coalition s) const;
    std::vector<std::string> coalition_labels(Coalition s) const;

    bool operator==(const PlayerSet&) const = default;

private:
    std::vector<std::string> labels_;
};

/// Player set with canonical labels "1".."n".
PlayerSet numbered_players(int n);

struct Allocation {
    PlayerSet players;
    std::vector<Rational> coords;

    Allocation() = default;
    Allocation(PlayerSet players_, std::vector<Rational> coords_);

    int size() const { return static_cast<int>(coords.size()); }
    Rational total() const;
    /// x(S) = sum of the coordinates of the members of S.
    Rational of(Coalition s) const;
    const Rational& at(std::string_view label) const;

    bool operator==(const Allocation& other) const {
        return players == other.players && coords == other.coords;
    }
};

/// A coalitional game: an ordered player set plus one exact rational value
/// per coalition, stored densely and indexed by bitmask. The grounded flag
/// declares membership in the space of games with v(empty) = 0.
class Game {
public:
    Game(PlayerSet players, std::vector<Rational> values, bool grounded);

    static Game zero(PlayerSet players, bool grounded = true);

    const PlayerSet& players() const { return players_; }
    int num_players() const { return players_.size(); }
    bool is_grounded() const { return grounded_; }

    const Rational& value(Coalition s) const;
    const Rational& value(const std::vector<std::string>& members) const;
    const std::vector<Rational>& values() const { return values_; }
    const Rational& grand_value() const { return values_.back(); }

    /// Position-wise equality of value tables, ignoring labels.
    bool same_values(const Game& other) const;

    /// Mathematical equality: same labeled players, same coalition function.
    bool operator==(const Game& other) const {
        return players_ == other.players_ && values_ == other.values_;
    }

private:
    PlayerSet players_;
    bool grounded_ = true;
    std::vector<Rational> values_;
};

/// A game expressed in the unanimity basis: coeffs[S] is the coefficient of
/// the unanimity game u_S (the Harsanyi dividend of S).
class MobiusGame {
public:
    MobiusGame(PlayerSet players, std::vector<Rational> coeffs);

    const PlayerSet& players() const { return players_; }
    int num_players() const { return players_.size(); }
    const Rational& coeff(Coalition s) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool operator==(const MobiusGame& other) const {
        return players_ == other.players_ && coeffs_ == other.coeffs_;
    }

private:
    PlayerSet players_;
    std::vector<Rational> coeffs_;
};

/// Builds a game from explicit entries. Keys are comma-joined label sets
/// ("" for the empty coalition); missing coalitions default to 0.
Game new_game(const std::vector<std::string>& labels,
              const std::map<std::string, std::string>& entries,
              bool grounded = true);

/// Indicator game of exactly S.
Game dirac(const PlayerSet& players, Coalition s, bool grounded = true);

/// Indicator game of the supersets of S; S must be nonempty.
Game unanimity(const PlayerSet& players, Coalition s);

/// The additive game v(S) = sum_{i in S} x_i.
Game additive_from_vector(const Allocation& x);

/// Simple game: v(S) = 1 iff the total weight of S reaches the quota.
/// Default labels are "1".."n".
Game weighted_majority(const std::vector<Rational>& weights, const Rational& quota,
                       std::vector<std::string> labels = {});

/// Subset-lattice transforms, computed in place in O(n 2^n).
MobiusGame mobius(const Game& g);
Game zeta(const MobiusGame& m);

/// Derivative at player i, as a game on the remaining players:
/// (d_i v)(S) = v(S + i) - v(S). Non-grounded whenever v({i}) != v(empty).
Game derivative_player(const Game& g, int pos0);
Game derivative_player(const Game& g, std::string_view player);

/// Iterated derivative with respect to a nonempty coalition T; equals any
/// order of single-player derivatives over T.
Game derivative_coalition(const Game& g, Coalition t);

/// Dual game v*(S) = v(N) - v(N minus S).
Game dual(const Game& g);

/// Left action of a permutation of positions: (sigma v)(S) = v(sigma^-1 S).
/// `sigma` is 0-based: sigma[k] is the image of position k.
Game permute(const Game& g, const std::vector<int>& sigma);

/// Subgame on the members of T, preserving their order.
Game restrict_to(const Game& g, Coalition t);
Game restrict_to(const Game& g, const std::vector<std::string>& members);

/// v(N) - sum of singleton values.
Rational cooperative_surplus(const Game& g);

/// Same value table under a different (equally sized) player set.
Game relabel(const Game& g, PlayerSet players);

} // namespace coop
