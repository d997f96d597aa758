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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coop/classes.hpp"
#include "coop/game.hpp"
#include "test_util.hpp"

using namespace coop;
using namespace coop::testing;

namespace {
const Game kGameA = game_of({"a1", "a2"}, {{"a1", "1"}, {"a2", "1"}, {"a1,a2", "3"}});
}

TEST_CASE("new_game fills missing coalitions with zero") {
    CHECK(kGameA.value({"a1", "a2"}) == 3);
    CHECK(kGameA.value(Coalition{0}) == 0);

    Game zero = game_of({"p"}, {});
    CHECK(zero.value(0b1) == 0);

    Game vempty = game_of({}, {{"", "1"}}, false);
    CHECK(vempty.num_players() == 0);
    CHECK(vempty.value(0) == 1);
}

TEST_CASE("new_game error paths") {
    CHECK_THROWS_AS(game_of({"a", "a"}, {}), Error);
    CHECK_THROWS_AS(game_of({"a"}, {{"b", "1"}}), Error);
    CHECK_THROWS_AS(game_of({"a"}, {{"", "2"}}, true), Error);
    CHECK_THROWS_AS(game_of({"a"}, {{"a", "oops"}}), Error);
    try {
        game_of({"a"}, {{"", "2"}}, true);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::nonzero_empty_set_when_grounded);
    }
    // non-grounded games may value the empty set
    CHECK(game_of({"a"}, {{"", "2"}}, false).value(0) == 2);
}

TEST_CASE("player size cap is enforced") {
    std::vector<std::string> many;
    for (int k = 0; k < 21; ++k) many.push_back("p" + std::to_string(k));
    CHECK_THROWS_AS(PlayerSet(many), Error);
}

TEST_CASE("value lookups and unanimity membership") {
    PlayerSet n3 = numbered_players(3);
    Game u13 = unanimity(n3, 0b101);
    for (Coalition t = 0; t < 8; ++t)
        CHECK(u13.value(t) == ((t & 0b101) == 0b101 ? 1 : 0));
    CHECK_THROWS_AS(kGameA.value(Coalition{7}), Error);
}

TEST_CASE("dirac games") {
    PlayerSet n2 = numbered_players(2);
    Game d = dirac(n2, 0b01);
    CHECK(d.value(0b01) == 1);
    CHECK(d.value(0b10) == 0);
    CHECK(d.value(0b11) == 0);

    Game one = dirac(numbered_players(1), 0b1);
    CHECK(one.value(0b1) == 1);
    CHECK(one.is_grounded());

    CHECK_THROWS_AS(dirac(n2, 0, true), Error);
    CHECK(dirac(n2, 0, false).value(0) == 1);

    MobiusGame m = mobius(dirac(n2, 0b01));
    CHECK(m.coeff(0b01) == 1);
    CHECK(m.coeff(0b11) == -1);
    CHECK(m.coeff(0b10) == 0);
    for (Coalition s = 0; s < 4; ++s)
        CHECK(m.coeff(s) == mobius_brute(dirac(n2, 0b01), s));
}

TEST_CASE("additive games sum their vector") {
    PlayerSet n2 = numbered_players(2);
    Game g = additive_from_vector(alloc_of(n2, {"1", "2"}));
    CHECK(g.value(0b01) == 1);
    CHECK(g.value(0b10) == 2);
    CHECK(g.value(0b11) == 3);
    CHECK(additive_from_vector(alloc_of(n2, {"0", "0"})).same_values(Game::zero(n2)));

    MobiusGame m = mobius(g);
    for (Coalition s = 0; s < 4; ++s) {
        CHECK(m.coeff(s) == mobius_brute(g, s));
        if (coalition_size(s) > 1) CHECK(m.coeff(s) == 0);
    }
}

TEST_CASE("weighted majority") {
    Game maj3 = weighted_majority({1, 1, 1}, 2);
    for (Coalition s = 0; s < 8; ++s)
        CHECK(maj3.value(s) == (coalition_size(s) >= 2 ? 1 : 0));

    Game one = weighted_majority({Rational(1)}, Rational(1));
    CHECK(one.value(0b1) == 1);

    Game d1like = weighted_majority({3, 1, 1}, 3);
    CHECK(d1like.value(0b110) == 0); // 1+1 < 3
    for (Coalition s = 0; s < 8; ++s)
        CHECK(d1like.value(s) == ((s & 0b001) ? 1 : 0));

    CHECK_THROWS_AS(weighted_majority({Rational(-1)}, Rational(1)), Error);
}

TEST_CASE("fast mobius equals the alternating sum and zeta inverts it") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        Game g = gen::random_game(rng, n, trial % 2 == 0);
        MobiusGame m = mobius(g);
        for (Coalition s = 0; s < m.coeffs().size(); ++s)
            CHECK(m.coeff(s) == mobius_brute(g, s));
        CHECK(zeta(m) == g);
    }
    // round trip stays exact up to the tested n = 10
    std::mt19937_64 big(11);
    Game g10 = gen::random_game(big, 10);
    CHECK(zeta(mobius(g10)) == g10);

    // zeta from explicit coefficients: singletons of {1,2} give the additive (1,1)
    PlayerSet n2 = numbered_players(2);
    Game add = zeta(MobiusGame(n2, {Rational(0), Rational(1), Rational(1), Rational(0)}));
    CHECK(add == additive_from_vector(alloc_of(n2, {"1", "1"})));
    for (Coalition s = 0; s < 4; ++s)
        CHECK(add.value(s) == zeta_brute({Rational(0), Rational(1), Rational(1), Rational(0)}, s));

    CHECK(zeta(mobius(Game::zero(n2))).same_values(Game::zero(n2)));
    CHECK(mobius(unanimity(n2, 0b11)).coeff(0b11) == 1);
    CHECK(mobius(unanimity(n2, 0b11)).coeff(0b01) == 0);
}

TEST_CASE("player derivative") {
    PlayerSet n2 = numbered_players(2);
    Game b = unanimity(n2, 0b11);

    Game db = derivative_player(b, "1");
    CHECK(db.num_players() == 1);
    CHECK(db.players().label(0) == "2");
    CHECK(db.value(0) == 0);
    CHECK(db.value(0b1) == 1);
    CHECK(db.is_grounded());

    Game add = additive_from_vector(alloc_of(n2, {"5", "7"}));
    Game da = derivative_player(add, "1");
    CHECK(da.value(0) == 5);
    CHECK(da.value(0b1) == 5);
    CHECK_FALSE(da.is_grounded()); // v({1}) != 0

    Game d1 = unanimity(n2, 0b01);
    Game dd = derivative_player(d1, "1");
    CHECK(dd.value(0) == 1);
    CHECK(dd.value(0b1) == 1);
    CHECK_FALSE(dd.is_grounded());

    CHECK_THROWS_AS(derivative_player(b, "zz"), Error);
}

TEST_CASE("coalition derivative matches iterated player derivatives") {
    PlayerSet n2 = numbered_players(2);
    Game b = unanimity(n2, 0b11);
    Game d12 = derivative_coalition(b, 0b11);
    CHECK(d12.num_players() == 0);
    CHECK(d12.value(0) == 1); // 1 - 0 - 0 + 0

    Game add = additive_from_vector(alloc_of(n2, {"5", "7"}));
    CHECK(derivative_coalition(add, 0b11).value(0) == 0);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5); // n <= 6
        Game g = gen::random_game(rng, n);
        Coalition t = 1 + static_cast<Coalition>(rng() % ((1u << n) - 1));
        // single players match derivative_player
        if (coalition_size(t) == 1)
            CHECK(derivative_coalition(g, t).same_values(
                derivative_player(g, std::countr_zero(t))));
        // any removal order gives the same iterated derivative
        std::vector<std::string> members = g.players().coalition_labels(t);
        std::shuffle(members.begin(), members.end(), rng);
        Game iterated = g;
        for (const auto& lab : members) iterated = derivative_player(iterated, lab);
        CHECK(derivative_coalition(g, t).same_values(iterated));
    }

    CHECK_THROWS_AS(derivative_coalition(b, 0), Error);
}

TEST_CASE("duality") {
    PlayerSet n2 = numbered_players(2);
    Game b = unanimity(n2, 0b11);
    Game d1 = unanimity(n2, 0b01);
    Game d2 = unanimity(n2, 0b10);

    CHECK(dual(d1) == d1);
    // B* = d_1 + d_2 - B
    Game bstar = dual(b);
    for (Coalition s = 0; s < 4; ++s)
        CHECK(bstar.value(s) == d1.value(s) + d2.value(s) - b.value(s));

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        Game g = gen::random_game(rng, 1 + static_cast<int>(rng() % 6));
        CHECK(dual(dual(g)) == g);
        // mobius(dual g)(S) = sum over T meeting S of mobius(g)(T)
        MobiusGame md = mobius(dual(g));
        MobiusGame mg = mobius(g);
        for (Coalition s = 0; s < md.coeffs().size(); ++s) {
            Rational sum = 0;
            for (Coalition t = 1; t < mg.coeffs().size(); ++t)
                if (t & s) sum += mg.coeff(t);
            CHECK(md.coeff(s) == sum);
        }
    }
}

TEST_CASE("permutation action") {
    PlayerSet n2 = numbered_players(2);
    Game d1 = unanimity(n2, 0b01);
    CHECK(permute(d1, {0, 1}) == d1);
    CHECK(permute(d1, {1, 0}).same_values(unanimity(n2, 0b10)));
    CHECK_THROWS_AS(permute(d1, {0, 0}), Error);
    CHECK_THROWS_AS(permute(d1, {0}), Error);

    // left action: (sigma tau) * g = sigma * (tau * g), random 3-player games
    std::mt19937_64 rng(19);
    std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 0, 1},
                                           {0, 2, 1}, {1, 2, 0}, {2, 1, 0}};
    for (int trial = 0; trial < 20; ++trial) {
        Game g = gen::random_game(rng, 3);
        const auto& sigma = perms[rng() % 6];
        const auto& tau = perms[rng() % 6];
        std::vector<int> composed(3);
        for (int k = 0; k < 3; ++k) composed[k] = sigma[tau[k]];
        CHECK(permute(g, composed) == permute(permute(g, tau), sigma));
    }
}

TEST_CASE("restriction") {
    PlayerSet n2 = numbered_players(2);
    Game b = unanimity(n2, 0b11);
    Game r = restrict_to(b, Coalition{0b01});
    CHECK(r.num_players() == 1);
    CHECK(r.value(0b1) == 0);

    CHECK(restrict_to(kGameA, kGameA.players().full_coalition()) == kGameA);

    // mobius commutes with restriction on random 4-player games
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        Game g = gen::random_game(rng, 4);
        Coalition keep = static_cast<Coalition>(rng() % 16);
        MobiusGame restricted = mobius(restrict_to(g, keep));
        MobiusGame full = mobius(g);
        for (Coalition s = 0; s < restricted.coeffs().size(); ++s)
            CHECK(restricted.coeff(s) == full.coeff(unpack_bits(s, keep)));
    }
}

TEST_CASE("cooperative surplus") {
    CHECK(cooperative_surplus(kGameA) == 1);
    PlayerSet n2 = numbered_players(2);
    CHECK(cooperative_surplus(additive_from_vector(alloc_of(n2, {"3", "4"}))) == 0);
    CHECK(cooperative_surplus(unanimity(n2, 0b11)) == 1);
}

TEST_CASE("grounded monotone games are non-negative") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        Game g = gen::random_capacity(rng, 1 + static_cast<int>(rng() % 4));
        REQUIRE(is_monotone(g));
        CHECK(is_nonnegative(g));
    }
}
