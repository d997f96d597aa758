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

#include <algorithm>
#include <random>

#include "coop/classes.hpp"
#include "coop/operad.hpp"
#include "test_util.hpp"

using namespace coop;
using namespace coop::testing;

namespace {
const Game kGameA = game_of({"a1", "a2"}, {{"a1", "1"}, {"a2", "1"}, {"a1,a2", "3"}});
const Game kGameB = game_of({"b1", "b2"}, {{"b1", "0"}, {"b2", "2"}, {"b1,b2", "3"}});
} // namespace

TEST_CASE("coalition composition") {
    // S = {1,2} over [2], insert T = {a} of a 2-set at position 1 -> {a, 2'}
    CHECK(coalition_compose(0b11, 1, 0b01, 2, 2) == 0b101);
    // i not in S: S is only re-indexed
    CHECK(coalition_compose(0b10, 1, 0b11, 2, 2) == 0b1000);
    CHECK_THROWS_AS(coalition_compose(0b1, 3, 0b1, 2, 1), Error);
}

TEST_CASE("unanimity games compose by the coalition rule, exhaustively to 4+4") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m)
            for (int i = 1; i <= n; ++i)
                for (Coalition s = 1; s < (1u << n); ++s)
                    for (Coalition t = 1; t < (1u << m); ++t) {
                        Game lhs = partial_compose(unanimity(numbered_players(n), s), i,
                                                   unanimity(numbered_players(m), t));
                        Game rhs = unanimity(numbered_players(n + m - 1),
                                             coalition_compose(s, i, t, n, m));
                        REQUIRE(lhs.same_values(rhs));
                    }
}

TEST_CASE("worked composite: (a1,a2) composed with (b1,b2) at a1") {
    Game c = partial_compose(kGameA, "a1", kGameB);
    REQUIRE(c.players().labels() == std::vector<std::string>{"b1", "b2", "a2"});
    CHECK(c.value({"a2"}) == 3);
    CHECK(c.value({"b1"}) == 0);
    CHECK(c.value({"b2"}) == 2);
    CHECK(c.value({"b1", "b2"}) == 3);
    CHECK(c.value({"b1", "a2"}) == 3);
    CHECK(c.value({"b1", "b2", "a2"}) == 9);
    // the definition gives 7 here (the worked example's 5 is inconsistent
    // with it; see the regression note in the README)
    CHECK(c.value({"b2", "a2"}) == 7);
    CHECK(c.is_grounded());
}

TEST_CASE("composition can leave the non-negative games") {
    Game alpha = game_of({"1", "2"}, {{"1", "0"}, {"2", "1000"}, {"1,2", "0"}});
    Game beta = game_of({"a", "b"}, {{"a", "0"}, {"b", "1"}, {"a,b", "1/2"}});
    Game c = partial_compose(alpha, 1, beta);
    CHECK(c.value({"b", "2"}) == -500);
}

TEST_CASE("unit laws") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        Game g = gen::random_game(rng, n);
        for (int i = 1; i <= n; ++i) CHECK(partial_compose(g, i, trivial_one()).same_values(g));
        CHECK(partial_compose(trivial_one(), 1, g).same_values(g));
    }
}

TEST_CASE("composing with the 0-player unit is the derivative") {
    Game b = bargaining();
    CHECK(partial_compose_nongrounded(b, 1, zero_player_unit())
              .same_values(derivative_player(b, 0)));
    CHECK(partial_compose_nongrounded(b, 1, zero_player_unit()).same_values(trivial_one()));

    // d_1 o_2 v_empty = the zero 1-player game
    Game d = dictator(1);
    Game z = partial_compose_nongrounded(d, 2, zero_player_unit());
    CHECK(z.num_players() == 1);
    CHECK(z.value(0) == 0);
    CHECK(z.value(1) == 0);

    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        Game g = gen::random_game(rng, n, trial % 2 == 0);
        const int i = 1 + static_cast<int>(rng() % n);
        CHECK(partial_compose_nongrounded(g, i, zero_player_unit())
                  .same_values(derivative_player(g, i - 1)));
    }
}

TEST_CASE("total composition iterates the partial one") {
    Game b = bargaining();
    CHECK(total_compose(b, {trivial_one(), trivial_one()}).same_values(b));

    Game two_dictators = total_compose(b, {dictator(1), dictator(1)});
    // wins exactly when the first player of each 2-player block is present
    CHECK(two_dictators.num_players() == 4);
    CHECK(two_dictators.same_values(unanimity(numbered_players(4), 0b0101)));

    CHECK_THROWS_AS(total_compose(b, {trivial_one()}), Error);
}

TEST_CASE("unanimity-basis composition is intertwined by mobius") {
    // single-term instance: u_{1} composed with u_{a,b}
    PlayerSet pa = numbered_players(1);
    MobiusGame ma(pa, {Rational(0), Rational(1)});
    MobiusGame mb = mobius(relabel(bargaining(), PlayerSet({"a", "b"})));
    MobiusGame composed = partial_compose_unanimity(ma, 1, mb);
    CHECK(composed.coeff(0b11) == 1);
    Rational total = 0;
    for (const auto& c : composed.coeffs()) total += c;
    CHECK(total == 1);

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3), m = 1 + static_cast<int>(rng() % 3);
        const int i = 1 + static_cast<int>(rng() % n);
        Game a = gen::random_game(rng, n, trial % 2 == 0);
        Game bb = gen::random_game(rng, m, trial % 3 != 0);
        CHECK(partial_compose_unanimity(mobius(a), i, mobius(bb)) ==
              mobius(partial_compose(a, i, bb)));
    }
}

TEST_CASE("normalized guests keep host coefficients") {
    // when the guest is normalized, coefficients off the slot are unchanged
    std::mt19937_64 rng(43);
    Game a = gen::random_game(rng, 3);
    Game b = gen::random_normalized(rng, 2);
    MobiusGame ma = mobius(a);
    MobiusGame mc = partial_compose_unanimity(ma, 2, mobius(b));
    for (Coalition s = 0; s < 8; ++s) {
        if (s & 0b010) continue;
        Coalition mapped = coalition_compose(s, 2, 0, 3, 2);
        CHECK(mc.coeff(mapped) == ma.coeff(s));
    }
}

TEST_CASE("partial tensor product") {
    PlayerSet x2 = numbered_players(2);
    Allocation a = alloc_of(x2, {"2", "1"});
    Allocation b = alloc_of(PlayerSet({"b1", "b2"}), {"0", "3"});
    Allocation t = partial_tensor(a, 1, b);
    CHECK(t.coords == std::vector<Rational>{Rational(0), Rational(6), Rational(3)});

    Allocation c = alloc_of(PlayerSet({"b1", "b2"}), {"1", "2"});
    CHECK(partial_tensor(alloc_of(x2, {"1", "2"}), 1, c).coords ==
          std::vector<Rational>{Rational(1), Rational(2), Rational(6)});

    Allocation unit = alloc_of(PlayerSet({"u"}), {"1"});
    Allocation kept = partial_tensor(a, 2, unit);
    CHECK(kept.coords == a.coords);

    // tensor of additive vectors is the composition of additive games
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3), m = 1 + static_cast<int>(rng() % 3);
        const int i = 1 + static_cast<int>(rng() % n);
        Allocation x = gen::random_allocation(rng, numbered_players(n));
        Allocation y = gen::random_allocation(rng, PlayerSet({"q1", "q2", "q3"}));
        Allocation ytrim(PlayerSet(std::vector<std::string>(
                             y.players.labels().begin(), y.players.labels().begin() + m)),
                         std::vector<Rational>(y.coords.begin(), y.coords.begin() + m));
        CHECK(additive_from_vector(partial_tensor(x, i, ytrim))
                  .same_values(partial_compose(additive_from_vector(x), i,
                                               additive_from_vector(ytrim))));
    }
}

TEST_CASE("generator games") {
    CHECK(bargaining() == unanimity(numbered_players(2), 0b11));
    CHECK(dual(bargaining()) == dual_bargaining());
    CHECK(dictator(2) == permute(dictator(1), {1, 0}));
    CHECK_THROWS_AS(dictator(3), Error);
}

TEST_CASE("shapley product and sum of simple games") {
    Game p = shapley_product(dictator(1), dictator(1));
    REQUIRE(p.num_players() == 4);
    for (Coalition s = 0; s < 16; ++s)
        CHECK(p.value(s) == (((s & 0b0001) && (s & 0b0100)) ? 1 : 0));

    Game q = shapley_sum(dictator(1), dictator(1));
    for (Coalition s = 0; s < 16; ++s)
        CHECK(q.value(s) == (((s & 0b0001) || (s & 0b0100)) ? 1 : 0));

    std::mt19937_64 rng(53);
    Game g = gen::random_game(rng, 3);
    CHECK(shapley_product(trivial_one(), g).same_values(g));
}

TEST_CASE("simple compound equals the total composition") {
    Game maj3 = weighted_majority({1, 1, 1}, 2);
    std::vector<Game> blocks = {maj3, maj3, maj3};
    Game compound = simple_compound(maj3, blocks);
    REQUIRE(compound.num_players() == 9);
    Game total = total_compose(maj3, blocks);
    CHECK(compound == total);

    // sanity: a coalition controlling two blocks wins
    Coalition two_blocks = 0b000011011; // block1 {1,2}, block2 {1,2}
    CHECK(compound.value(two_blocks) == 1);
    Coalition one_block = 0b000000111;
    CHECK(compound.value(one_block) == 0);

    // dictator-type quotient: compound wins iff block 1 wins
    Game d1q = unanimity(numbered_players(2), 0b01);
    Game c2 = simple_compound(d1q, {maj3, maj3});
    for (Coalition s = 0; s < (1u << 6); ++s)
        CHECK(c2.value(s) == maj3.value(s & 0b111));

    // components all trivial: back to the quotient
    Game again = simple_compound(maj3, {trivial_one(), trivial_one(), trivial_one()});
    CHECK(again.same_values(maj3));

    CHECK_THROWS_AS(simple_compound(kGameA, {trivial_one(), trivial_one()}), Error);
    Game notmono = dirac(numbered_players(2), 0b01);
    CHECK_THROWS_AS(simple_compound(notmono, {trivial_one(), trivial_one()}), Error);
}

TEST_CASE("owen tensor composition equals the total composition") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 15; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 3);
        Game quotient = gen::random_capacity(rng, k);
        std::vector<Game> comps;
        for (int j = 0; j < k; ++j) {
            Game c = gen::random_capacity(rng, 1 + static_cast<int>(rng() % 2));
            std::vector<Rational> values = c.values();
            if (values.back() == 0) values.back() = 1;
            const Rational scale = values.back();
            for (auto& v : values) v /= scale;
            comps.push_back(Game(c.players(), std::move(values), true));
        }
        Game owen = owen_tensor_composition(quotient, comps);
        Game total = total_compose(quotient, comps);
        CHECK(owen == total);
    }

    Game arity1 = trivial_one();
    Game single = gen::random_normalized(rng, 2);
    CHECK(owen_tensor_composition(arity1, {single}).same_values(single));

    CHECK_THROWS_AS(owen_tensor_composition(trivial_one(), {kGameA}), Error);
}

TEST_CASE("label collisions get the host-player prefix") {
    Game host = game_of({"x", "y"}, {{"x", "1"}, {"x,y", "1"}});
    Game guest = game_of({"y", "z"}, {{"y,z", "1"}});
    Game c = partial_compose(host, "x", guest);
    CHECK(c.players().labels() == std::vector<std::string>{"x.y", "x.z", "y"});

    Game clash = game_of({"x.y", "q"}, {});
    CHECK_THROWS_AS(partial_compose(host, "x", clash), Error);
}

TEST_CASE("ComTriass relations hold for the generator image") {
    Game b = bargaining(), d1 = dictator(1), d2 = dictator(2);
    // associativity of the symmetric product
    CHECK(partial_compose(b, 1, b).same_values(partial_compose(b, 2, b)));
    // permutativity of the other product
    Game l = partial_compose(d1, 1, d1);
    CHECK(l.same_values(partial_compose(d1, 2, d1)));
    CHECK(l.same_values(partial_compose(d1, 2, d2)));
    // mixed relations 3 and 3'
    CHECK(partial_compose(d1, 2, b).same_values(partial_compose(d1, 2, d1)));
    CHECK(partial_compose(d1, 1, b).same_values(partial_compose(b, 2, d1)));
    // unital relations
    CHECK(partial_compose(b, 1, zero_player_unit()).same_values(trivial_one()));
    Game z = partial_compose(d1, 2, zero_player_unit());
    CHECK(z.same_values(Game::zero(numbered_players(1))));
}

TEST_CASE("generator expressions build every unanimity game") {
    auto [e2, g2] = build_unanimity_from_generators(2, 0b11);
    CHECK(e2.to_sexpr() == "B");
    CHECK(g2 == bargaining());

    auto [e13, g13] = build_unanimity_from_generators(3, 0b101);
    CHECK(e13.to_sexpr() == "(comp B 2 d2)");
    CHECK(g13 == unanimity(numbered_players(3), 0b101));

    auto [echain, gchain] = build_unanimity_from_generators(3, 0b111);
    CHECK(gchain == unanimity(numbered_players(3), 0b111));
    CHECK(echain.to_sexpr() == "(comp B 2 B)");

    for (int n = 1; n <= 4; ++n)
        for (Coalition s = 1; s < (1u << n); ++s) {
            auto [expr, game] = build_unanimity_from_generators(n, s);
            REQUIRE(game == unanimity(numbered_players(n), s));
            REQUIRE(expr.arity() == n);
        }

    CHECK_THROWS_AS(build_unanimity_from_generators(3, 0), Error);
}

TEST_CASE("sexpr parser round-trips") {
    auto [expr, game] = build_unanimity_from_generators(4, 0b1011);
    GeneratorExpr reparsed = GeneratorExpr::parse_sexpr(expr.to_sexpr());
    CHECK(reparsed.to_sexpr() == expr.to_sexpr());
    CHECK(reparsed.evaluate() == game);

    GeneratorExpr mixed = GeneratorExpr::parse_sexpr("(comp (comp B 1 B) 2 d1)");
    CHECK(mixed.arity() == 4);
    CHECK(mixed.evaluate().num_players() == 4);

    CHECK_THROWS_AS(GeneratorExpr::parse_sexpr("(comp B 7 B)"), Error);
    CHECK_THROWS_AS(GeneratorExpr::parse_sexpr("(comp B 1)"), Error);
    CHECK_THROWS_AS(GeneratorExpr::parse_sexpr("(comp"), Error);
    CHECK_THROWS_AS(GeneratorExpr::parse_sexpr("nope"), Error);
}

TEST_CASE("evaluated generator expressions span the grounded games") {
    for (int n = 2; n <= 4; ++n) {
        std::vector<std::vector<Rational>> rows;
        for (Coalition s = 1; s < (1u << n); ++s)
            rows.push_back(build_unanimity_from_generators(n, s).second.values());
        // some random composites stay inside the span
        std::mt19937_64 rng(61 + n);
        for (int extra = 0; extra < 5; ++extra) {
            Coalition s1 = 1 + static_cast<Coalition>(rng() % ((1u << (n - 1)) - 1 + 1));
            auto [e1, g1] = build_unanimity_from_generators(n - 1, s1);
            GeneratorExpr expr = GeneratorExpr::comp(
                e1, 1 + static_cast<int>(rng() % (n - 1)), GeneratorExpr::parse_sexpr("d1"));
            Game evaluated = expr.evaluate();
            REQUIRE(evaluated.num_players() == n);
            rows.push_back(evaluated.values());
        }
        CHECK(exact_rank(std::move(rows)) == (1 << n) - 1);
    }
}

TEST_CASE("operad axioms hold on random triples") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 30; ++trial) {
        const int p = 2 + static_cast<int>(rng() % 2);
        Game lambda = gen::random_game(rng, p);
        Game mu = gen::random_game(rng, 1 + static_cast<int>(rng() % 3));
        Game nu = gen::random_game(rng, 1 + static_cast<int>(rng() % 3));
        const int i = 1 + static_cast<int>(rng() % (p - 1));
        const int k = i + 1 + static_cast<int>(rng() % (p - i));
        const int j = 1 + static_cast<int>(rng() % mu.num_players());
        AxiomReport rep = check_operad_axioms(lambda, mu, nu, i, j, k);
        if (!rep.all_passed())
            for (const auto& issue : rep.issues)
                MESSAGE(issue.axiom << " " << issue.detail << " lhs=" << issue.lhs
                                    << " rhs=" << issue.rhs);
        REQUIRE(rep.all_passed());
    }
}

TEST_CASE("axiom checker reports the first differing coalition") {
    // feed indices that break the parallel axiom pairing on purpose is not
    // possible through the checked API, so check the index validation instead
    Game b = bargaining();
    CHECK_THROWS_AS(check_operad_axioms(b, b, b, 2, 1, 1), Error);
    CHECK_THROWS_AS(check_operad_axioms(b, b, b, 1, 3, 2), Error);
}

TEST_CASE("equivariance permutations exhaustively at small arity") {
    std::mt19937_64 rng(71);
    for (int p = 2; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q) {
            Game lambda = gen::random_game(rng, p);
            Game mu = gen::random_game(rng, q);
            for (int i = 1; i < p; ++i) {
                AxiomReport rep = check_operad_axioms(lambda, mu, mu, i, 1, i + 1);
                REQUIRE(rep.equivariance_inner);
                REQUIRE(rep.equivariance_outer);
            }
        }
}
