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

#include "coop/game.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace coop {

Coalition pack_bits(Coalition mask, Coalition keep) {
    Coalition out = 0;
    int slot = 0;
    for (int k = 0; keep >> k; ++k) {
        if (keep & (Coalition{1} << k)) {
            if (mask & (Coalition{1} << k)) out |= Coalition{1} << slot;
            ++slot;
        }
    }
    return out;
}

Coalition unpack_bits(Coalition packed, Coalition keep) {
    Coalition out = 0;
    int slot = 0;
    for (int k = 0; keep >> k; ++k) {
        if (keep & (Coalition{1} << k)) {
            if (packed & (Coalition{1} << slot)) out |= Coalition{1} << k;
            ++slot;
        }
    }
    return out;
}

int max_players() {
    static const int cap = [] {
        if (const char* env = std::getenv("COOP_MAX_PLAYERS")) {
            int v = std::atoi(env);
            if (v >= 0 && v <= 30) return v;
        }
        return 20;
    }();
    return cap;
}

PlayerSet::PlayerSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (static_cast<int>(labels_.size()) > max_players())
        fail(Errc::size_cap, "player count " + std::to_string(labels_.size()) +
                                 " exceeds cap " + std::to_string(max_players()));
    std::set<std::string> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second) fail(Errc::duplicate_label, l);
}

const std::string& PlayerSet::label(int pos0) const {
    if (pos0 < 0 || pos0 >= size()) fail(Errc::index_out_of_range, "player position");
    return labels_[pos0];
}

int PlayerSet::position(std::string_view label) const {
    for (int k = 0; k < size(); ++k)
        if (labels_[k] == label) return k;
    return -1;
}

int PlayerSet::require_position(std::string_view label) const {
    int p = position(label);
    if (p < 0) fail(Errc::unknown_player, std::string(label));
    return p;
}

Coalition PlayerSet::coalition(const std::vector<std::string>& members) const {
    Coalition s = 0;
    for (const auto& m : members) {
        int p = position(m);
        if (p < 0) fail(Errc::unknown_player_in_coalition, m);
        s |= Coalition{1} << p;
    }
    return s;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace

Coalition PlayerSet::coalition_from_key(std::string_view key) const {
    key = trim(key);
    if (key.empty()) return 0;
    Coalition s = 0;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = key.find(',', start);
        std::string_view piece = trim(key.substr(start, comma - start));
        int p = position(piece);
        if (p < 0) fail(Errc::unknown_player_in_coalition, std::string(piece));
        s |= Coalition{1} << p;
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return s;
}

std::string PlayerSet::coalition_key(Coalition s) const {
    std::string out;
    for (int k = 0; k < size(); ++k) {
        if (s & (Coalition{1} << k)) {
            if (!out.empty()) out += ',';
            out += labels_[k];
        }
    }
    return out;
}

std::vector<std::string> PlayerSet::coalition_labels(Coalition s) const {
    std::vector<std::string> out;
    for (int k = 0; k < size(); ++k)
        if (s & (Coalition{1} << k)) out.push_back(labels_[k]);
    return out;
}

PlayerSet numbered_players(int n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int k = 1; k <= n; ++k) labels.push_back(std::to_string(k));
    return PlayerSet(std::move(labels));
}

Allocation::Allocation(PlayerSet players_, std::vector<Rational> coords_)
    : players(std::move(players_)), coords(std::move(coords_)) {
    if (static_cast<int>(coords.size()) != players.size())
        fail(Errc::dimension_mismatch, "allocation length does not match player count");
}

Rational Allocation::total() const {
    return std::accumulate(coords.begin(), coords.end(), Rational(0));
}

Rational Allocation::of(Coalition s) const {
    Rational sum = 0;
    for (int k = 0; k < size(); ++k)
        if (s & (Coalition{1} << k)) sum += coords[k];
    return sum;
}

const Rational& Allocation::at(std::string_view label) const {
    return coords[players.require_position(label)];
}

Game::Game(PlayerSet players, std::vector<Rational> values, bool grounded)
    : players_(std::move(players)), grounded_(grounded), values_(std::move(values)) {
    if (values_.size() != players_.num_coalitions())
        fail(Errc::internal, "value table size must be 2^n");
    if (grounded_ && values_[0] != 0)
        fail(Errc::nonzero_empty_set_when_grounded, to_string(values_[0]));
}

Game Game::zero(PlayerSet players, bool grounded) {
    std::vector<Rational> values(players.num_coalitions(), Rational(0));
    return Game(std::move(players), std::move(values), grounded);
}

const Rational& Game::value(Coalition s) const {
    if (s >= values_.size()) fail(Errc::index_out_of_range, "coalition outside the player set");
    return values_[s];
}

const Rational& Game::value(const std::vector<std::string>& members) const {
    return values_[players_.coalition(members)];
}

bool Game::same_values(const Game& other) const {
    return values_ == other.values_;
}

MobiusGame::MobiusGame(PlayerSet players, std::vector<Rational> coeffs)
    : players_(std::move(players)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != players_.num_coalitions())
        fail(Errc::internal, "coefficient table size must be 2^n");
}

const Rational& MobiusGame::coeff(Coalition s) const {
    if (s >= coeffs_.size()) fail(Errc::index_out_of_range, "coalition outside the player set");
    return coeffs_[s];
}

namespace {

/// Derived games are declared grounded exactly when their empty-set value
/// vanishes.
Game derived(PlayerSet players, std::vector<Rational> values) {
    bool grounded = values[0] == 0;
    return Game(std::move(players), std::move(values), grounded);
}

} // namespace

Game new_game(const std::vector<std::string>& labels,
              const std::map<std::string, std::string>& entries, bool grounded) {
    PlayerSet players(labels);
    std::vector<Rational> values(players.num_coalitions(), Rational(0));
    for (const auto& [key, text] : entries) {
        Coalition s = players.coalition_from_key(key);
        Rational r = parse_rational(text);
        if (grounded && s == 0 && r != 0)
            fail(Errc::nonzero_empty_set_when_grounded, text);
        values[s] = r;
    }
    return Game(std::move(players), std::move(values), grounded);
}

Game dirac(const PlayerSet& players, Coalition s, bool grounded) {
    if (s >= players.num_coalitions()) fail(Errc::index_out_of_range, "support coalition");
    if (grounded && s == 0)
        fail(Errc::empty_support_for_grounded_game, "dirac at the empty coalition");
    std::vector<Rational> values(players.num_coalitions(), Rational(0));
    values[s] = 1;
    return Game(players, std::move(values), grounded);
}

Game unanimity(const PlayerSet& players, Coalition s) {
    if (s >= players.num_coalitions()) fail(Errc::index_out_of_range, "support coalition");
    if (s == 0) fail(Errc::empty_support, "unanimity requires a nonempty support");
    std::vector<Rational> values(players.num_coalitions(), Rational(0));
    for (Coalition t = 0; t < values.size(); ++t)
        if ((t & s) == s) values[t] = 1;
    return Game(players, std::move(values), true);
}

Game additive_from_vector(const Allocation& x) {
    std::vector<Rational> values(x.players.num_coalitions(), Rational(0));
    for (Coalition s = 1; s < values.size(); ++s) {
        int low = std::countr_zero(s);
        values[s] = values[s & (s - 1)] + x.coords[low];
    }
    return Game(x.players, std::move(values), true);
}

Game weighted_majority(const std::vector<Rational>& weights, const Rational& quota,
                       std::vector<std::string> labels) {
    for (const auto& w : weights)
        if (w < 0) fail(Errc::negative_weight, to_string(w));
    PlayerSet players = labels.empty() ? numbered_players(static_cast<int>(weights.size()))
                                       : PlayerSet(std::move(labels));
    if (players.size() != static_cast<int>(weights.size()))
        fail(Errc::dimension_mismatch, "one weight per player");
    std::vector<Rational> values(players.num_coalitions(), Rational(0));
    for (Coalition s = 0; s < values.size(); ++s) {
        Rational total = 0;
        for (int k = 0; k < players.size(); ++k)
            if (s & (Coalition{1} << k)) total += weights[k];
        if (total >= quota) values[s] = 1;
    }
    return derived(players, std::move(values));
}

MobiusGame mobius(const Game& g) {
    std::vector<Rational> a = g.values();
    const int n = g.num_players();
    for (int i = 0; i < n; ++i) {
        const Coalition bit = Coalition{1} << i;
        for (Coalition s = 0; s < a.size(); ++s)
            if (s & bit) a[s] -= a[s ^ bit];
    }
    return MobiusGame(g.players(), std::move(a));
}

Game zeta(const MobiusGame& m) {
    std::vector<Rational> a = m.coeffs();
    const int n = m.num_players();
    for (int i = 0; i < n; ++i) {
        const Coalition bit = Coalition{1} << i;
        for (Coalition s = 0; s < a.size(); ++s)
            if (s & bit) a[s] += a[s ^ bit];
    }
    return derived(m.players(), std::move(a));
}

Game derivative_player(const Game& g, int pos0) {
    if (pos0 < 0 || pos0 >= g.num_players()) fail(Errc::unknown_player, std::to_string(pos0));
    const Coalition bit = Coalition{1} << pos0;
    const Coalition keep = g.players().full_coalition() & ~bit;
    PlayerSet players(g.players().coalition_labels(keep));
    std::vector<Rational> values(players.num_coalitions());
    for (Coalition s = 0; s < values.size(); ++s) {
        Coalition full = unpack_bits(s, keep);
        values[s] = g.value(full | bit) - g.value(full);
    }
    return derived(std::move(players), std::move(values));
}

Game derivative_player(const Game& g, std::string_view player) {
    return derivative_player(g, g.players().require_position(player));
}

Game derivative_coalition(const Game& g, Coalition t) {
    if (t == 0) fail(Errc::empty_derivative_set, "derivative with respect to the empty set");
    if (t >= g.players().num_coalitions()) fail(Errc::unknown_player, "coalition outside player set");
    const Coalition keep = g.players().full_coalition() & ~t;
    PlayerSet players(g.players().coalition_labels(keep));
    const int tsize = coalition_size(t);
    std::vector<Rational> values(players.num_coalitions(), Rational(0));
    for (Coalition s = 0; s < values.size(); ++s) {
        Coalition base = unpack_bits(s, keep);
        // alternating sum over subsets K of t
        Coalition k = t;
        while (true) {
            if ((tsize - coalition_size(k)) % 2 == 0)
                values[s] += g.value(base | k);
            else
                values[s] -= g.value(base | k);
            if (k == 0) break;
            k = (k - 1) & t;
        }
    }
    return derived(std::move(players), std::move(values));
}

Game dual(const Game& g) {
    const Coalition full = g.players().full_coalition();
    std::vector<Rational> values(g.values().size());
    for (Coalition s = 0; s < values.size(); ++s)
        values[s] = g.grand_value() - g.value(full ^ s);
    return derived(g.players(), std::move(values));
}

Game permute(const Game& g, const std::vector<int>& sigma) {
    const int n = g.num_players();
    if (static_cast<int>(sigma.size()) != n) fail(Errc::not_a_permutation, "wrong length");
    std::vector<bool> hit(n, false);
    for (int v : sigma) {
        if (v < 0 || v >= n || hit[v]) fail(Errc::not_a_permutation, "not a bijection");
        hit[v] = true;
    }
    std::vector<Rational> values(g.values().size());
    for (Coalition s = 0; s < values.size(); ++s) {
        Coalition pre = 0;
        for (int k = 0; k < n; ++k)
            if (s & (Coalition{1} << sigma[k])) pre |= Coalition{1} << k;
        values[s] = g.value(pre);
    }
    return derived(g.players(), std::move(values));
}

Game restrict_to(const Game& g, Coalition t) {
    if (t >= g.players().num_coalitions()) fail(Errc::unknown_player, "coalition outside player set");
    PlayerSet players(g.players().coalition_labels(t));
    std::vector<Rational> values(players.num_coalitions());
    for (Coalition s = 0; s < values.size(); ++s)
        values[s] = g.value(unpack_bits(s, t));
    return derived(std::move(players), std::move(values));
}

Game restrict_to(const Game& g, const std::vector<std::string>& members) {
    Coalition t = 0;
    for (const auto& m : members) t |= Coalition{1} << g.players().require_position(m);
    return restrict_to(g, t);
}

Rational cooperative_surplus(const Game& g) {
    Rational s = g.grand_value();
    for (int k = 0; k < g.num_players(); ++k) s -= g.value(Coalition{1} << k);
    return s;
}

Game relabel(const Game& g, PlayerSet players) {
    if (players.size() != g.num_players())
        fail(Errc::dimension_mismatch, "relabel requires the same player count");
    return Game(std::move(players), g.values(), g.is_grounded());
}

} // namespace coop
