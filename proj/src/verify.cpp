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

#include "coop/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "coop/classes.hpp"
#include "coop/json_io.hpp"
#include "coop/operad.hpp"
#include "coop/solutions.hpp"

namespace coop {

namespace {

using gen::Rng;

int pick(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<int> random_order(Rng& rng, int n) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    return order;
}

Game add_games(const Game& a, const Game& b) {
    std::vector<Rational> values(a.values().size());
    for (Coalition s = 0; s < values.size(); ++s) values[s] = a.value(s) + b.value(s);
    const bool grounded = values[0] == 0;
    return Game(a.players(), std::move(values), grounded);
}

Game scale_game(const Rational& c, const Game& a) {
    std::vector<Rational> values(a.values().size());
    for (Coalition s = 0; s < values.size(); ++s) values[s] = c * a.value(s);
    const bool grounded = values[0] == 0;
    return Game(a.players(), std::move(values), grounded);
}

struct SuiteRun {
    VerifyResult result;
    json fixtures = json::array();

    explicit SuiteRun(std::string name) { result.suite = std::move(name); }

    void check(bool ok, const std::function<json()>& fixture) {
        ++result.checks;
        if (!ok) {
            ++result.failures;
            if (fixtures.size() < 16) fixtures.push_back(fixture());
        }
    }

    VerifyResult finish(const VerifyOptions& opts, json extra = json::object()) {
        result.hard_pass = result.report_only || result.failures == 0;
        result.report = json{{"suite", result.suite},
                             {"seed", opts.seed},
                             {"trials", opts.trials},
                             {"checks", result.checks},
                             {"failures", result.failures}};
        if (!fixtures.empty()) result.report["failing_fixtures"] = fixtures;
        for (auto& [k, v] : extra.items()) result.report[k] = v;
        return result;
    }
};

json pair_fixture(const Game& a, int pos1, const Game& b, const std::string& note) {
    return json{{"note", note}, {"at", pos1}, {"host", game_to_json(a)}, {"guest", game_to_json(b)}};
}

// ---- axioms ------------------------------------------------------------

VerifyResult suite_axioms(const VerifyOptions& opts) {
    Rng rng(opts.seed);
    SuiteRun run("axioms");

    // u_S o_i u_T = u_{S <> T}, exhaustively for n, m <= 4
    for (int n = 1; n <= 4; ++n) {
        for (int m = 1; m <= 4; ++m) {
            for (int i = 1; i <= n; ++i) {
                for (Coalition s = 1; s < (Coalition{1} << n); ++s) {
                    for (Coalition t = 1; t < (Coalition{1} << m); ++t) {
                        Game lhs = partial_compose(unanimity(numbered_players(n), s), i,
                                                   unanimity(numbered_players(m), t));
                        Coalition st = coalition_compose(s, i, t, n, m);
                        Game rhs = unanimity(numbered_players(n + m - 1), st);
                        run.check(lhs.same_values(rhs), [&] {
                            return json{{"note", "unanimity composition"}, {"n", n}, {"m", m},
                                        {"i", i},    {"S", s},            {"T", t}};
                        });
                    }
                }
            }
        }
    }

    // random triples: sequential, parallel, unit, both equivariances
    for (int t = 0; t < opts.trials; ++t) {
        const int p = pick(rng, 2, 3), q = pick(rng, 1, 3), r = pick(rng, 1, 3);
        Game lambda = gen::random_game(rng, p);
        Game mu = gen::random_game(rng, q);
        Game nu = gen::random_game(rng, r);
        const int i = pick(rng, 1, p - 1);
        const int k = pick(rng, i + 1, p);
        const int j = pick(rng, 1, q);
        AxiomReport rep = check_operad_axioms(lambda, mu, nu, i, j, k);
        run.check(rep.all_passed(), [&] {
            json issues = json::array();
            for (const auto& iss : rep.issues)
                issues.push_back({{"axiom", iss.axiom}, {"detail", iss.detail},
                                  {"lhs", iss.lhs},     {"rhs", iss.rhs}});
            return json{{"note", "operad axioms"},
                        {"trial", t},
                        {"lambda", game_to_json(lambda)},
                        {"mu", game_to_json(mu)},
                        {"nu", game_to_json(nu)},
                        {"i", i},
                        {"j", j},
                        {"k", k},
                        {"issues", issues}};
        });
    }

    // bilinearity in both slots
    for (int t = 0; t < opts.trials; ++t) {
        const int n = pick(rng, 1, 3), m = pick(rng, 1, 3);
        const int i = pick(rng, 1, n);
        Game g = gen::random_game(rng, n), h = gen::random_game(rng, n);
        Game f = gen::random_game(rng, m);
        Rational c = gen::random_rational(rng);
        Game left_lhs = partial_compose(add_games(g, scale_game(c, h)), i, f);
        Game left_rhs =
            add_games(partial_compose(g, i, f), scale_game(c, partial_compose(h, i, f)));
        run.check(left_lhs.same_values(left_rhs),
                  [&] { return pair_fixture(g, i, f, "left bilinearity"); });

        Game gm = gen::random_game(rng, m), hm = gen::random_game(rng, m);
        const int j = pick(rng, 1, f.num_players());
        Game right_lhs = partial_compose(f, j, add_games(gm, scale_game(c, hm)));
        Game right_rhs =
            add_games(partial_compose(f, j, gm), scale_game(c, partial_compose(f, j, hm)));
        run.check(right_lhs.same_values(right_rhs),
                  [&] { return pair_fixture(f, j, gm, "right bilinearity"); });
    }

    return run.finish(opts);
}

// ---- mobius / transforms -------------------------------------------------

VerifyResult suite_mobius(const VerifyOptions& opts) {
    Rng rng(opts.seed);
    SuiteRun run("mobius");

    for (int t = 0; t < opts.trials; ++t) {
        const int n = pick(rng, 1, 8);
        Game g = gen::random_game(rng, n, pick(rng, 0, 1) == 0);
        run.check(zeta(mobius(g)) == g,
                  [&] { return json{{"note", "zeta(mobius) != id"}, {"game", game_to_json(g)}}; });

        MobiusGame m = mobius(gen::random_game(rng, pick(rng, 1, 6), false));
        run.check(mobius(zeta(m)) == m, [&] {
            return json{{"note", "mobius(zeta) != id"}, {"coeffs", mobius_to_json(m)}};
        });
    }

    // the Mobius transform is a change of basis for the composition
    for (int t = 0; t < opts.trials; ++t) {
        const int n = pick(rng, 1, 3), m = pick(rng, 1, 3);
        const int i = pick(rng, 1, n);
        Game a = gen::random_game(rng, n), b = gen::random_game(rng, m);
        MobiusGame via_basis = partial_compose_unanimity(mobius(a), i, mobius(b));
        MobiusGame direct = mobius(partial_compose(a, i, b));
        run.check(via_basis == direct,
                  [&] { return pair_fixture(a, i, b, "unanimity-basis composition mismatch"); });
    }

    // permutations act compatibly with the basis change
    for (int t = 0; t < opts.trials; ++t) {
        const int n = pick(rng, 1, 4);
        Game g = gen::random_game(rng, n);
        std::vector<int> sigma = random_order(rng, n);
        MobiusGame lhs = mobius(permute(g, sigma));
        MobiusGame base = mobius(g);
        bool ok = true;
        for (Coalition s = 0; s < lhs.coeffs().size() && ok; ++s) {
            Coalition pre = 0;
            for (int b = 0; b < n; ++b)
                if (s & (Coalition{1} << sigma[b])) pre |= Coalition{1} << b;
            ok = lhs.coeff(s) == base.coeff(pre);
        }
        run.check(ok, [&] {
            return json{{"note", "mobius does not intertwine the permutation action"},
                        {"game", game_to_json(g)}};
        });
    }

    return run.finish(opts);
}

// ---- duality -------------------------------------------------------------

VerifyResult suite_duality(const VerifyOptions& opts) {
    Rng rng(opts.seed);
    SuiteRun run("duality");

    for (int t = 0; t < opts.trials; ++t) {
        const int n = pick(rng, 1, 6);
        Game g = gen::random_game(rng, n);
        run.check(dual(dual(g)) == g,
                  [&] { return json{{"note", "dual not involutive"}, {"game", game_to_json(g)}}; });

        // d_i v*(S) = d_i v(N minus S) as set functions on N minus i
        const int i = pick(rng, 0, n - 1);
        Game dg = derivative_player(g, i);
        Game dgd = derivative_player(dual(g), i);
        const Coalition full = dg.players().full_coalition();
        bool ok = true;
        for (Coalition s = 0; s <= full && ok; ++s) ok = dgd.value(s) == dg.value(full ^ s);
        run.check(ok, [&] {
            return json{{"note", "derivative/duality lemma"}, {"game", game_to_json(g)}, {"i", i}};
        });

        // mu^{v*}(S) = sum over T meeting S of mu^v(T)
        MobiusGame md = mobius(dual(g));
        MobiusGame mg = mobius(g);
        bool mok = true;
        for (Coalition s = 0; s < md.coeffs().size() && mok; ++s) {
            Rational sum = 0;
            for (Coalition u = 1; u < mg.coeffs().size(); ++u)
                if (u & s) sum += mg.coeff(u);
            mok = md.coeff(s) == sum;
        }
        run.check(mok, [&] {
            return json{{"note", "mobius/duality lemma"}, {"game", game_to_json(g)}};
        });
    }

    // duality commutes with the composition
    for (int t = 0; t < opts.trials; ++t) {
        const int n = pick(rng, 1, 3), m = pick(rng, 1, 3);
        const int i = pick(rng, 1, n);
        Game a = gen::random_game(rng, n), b = gen::random_game(rng, m);
        run.check(dual(partial_compose(a, i, b)) == partial_compose(dual(a), i, dual(b)),
                  [&] { return pair_fixture(a, i, b, "duality does not commute"); });
    }

    // duals exchange k-monotone and k-alternating, and preserve capacities
    for (int t = 0; t < opts.trials; ++t) {
        const int n = pick(rng, 1, 4);
        Game g = pick(rng, 0, 1) == 0 ? gen::random_game(rng, n) : gen::random_capacity(rng, n);
        const int k = pick(rng, 2, 4);
        run.check(is_k_alternating(g, k) == is_k_monotone(dual(g), k), [&] {
            return json{{"note", "k-alternating != k-monotone of dual"},
                        {"k", k},
                        {"game", game_to_json(g)}};
        });
        Game cap = gen::random_capacity(rng, n);
        run.check(is_capacity(dual(cap)), [&] {
            return json{{"note", "dual of capacity not a capacity"}, {"game", game_to_json(cap)}};
        });
    }

    return run.finish(opts);
}

// ---- closure ---------------------------------------------------------------

struct ClosureClass {
    std::string name;
    std::function<Game(Rng&, int)> generate;
    std::function<bool(const Game&)> member;
};

std::vector<ClosureClass> closure_classes(int k) {
    auto kmono = [](int kk) {
        return ClosureClass{
            std::to_string(kk) + "-monotone",
            [kk](Rng& rng, int n) { return gen::random_k_monotone_nonneg(rng, n, kk); },
            [kk](const Game& g) { return is_nonnegative(g) && is_k_monotone(g, kk); }};
    };
    auto kalt = [](int kk) {
        return ClosureClass{
            std::to_string(kk) + "-alternating",
            [kk](Rng& rng, int n) { return gen::random_k_alternating_capacity(rng, n, kk); },
            [kk](const Game& g) { return is_capacity(g) && is_k_alternating(g, kk); }};
    };
    return {
        {"normalized", [](Rng& rng, int n) { return gen::random_normalized(rng, n); },
         [](const Game& g) { return is_normalized(g); }},
        {"simple-monotone", [](Rng& rng, int n) { return gen::random_simple_monotone(rng, n); },
         [](const Game& g) { return is_simple(g) && is_monotone(g); }},
        {"capacity", [](Rng& rng, int n) { return gen::random_capacity(rng, n); },
         [](const Game& g) { return is_capacity(g); }},
        {"convex", [](Rng& rng, int n) { return gen::random_convex_nonneg(rng, n); },
         [](const Game& g) { return is_nonnegative(g) && is_convex(g); }},
        kmono(std::max(2, k)),
        kmono(std::max(2, k) + 1),
        kalt(std::max(2, k)),
        {"totally-monotone", [](Rng& rng, int n) { return gen::random_totally_monotone(rng, n); },
         [](const Game& g) { return is_nonnegative(g) && is_totally_monotone(g); }},
        {"balanced", [](Rng& rng, int n) { return gen::random_balanced_capacity(rng, n); },
         [](const Game& g) { return is_capacity(g) && is_balanced(g); }},
    };
}

VerifyResult suite_closure(const VerifyOptions& opts) {
    Rng rng(opts.seed);
    SuiteRun run("closure");
    json per_class = json::object();

    for (const auto& cls : closure_classes(opts.k)) {
        if (!opts.klass.empty() && opts.klass != cls.name) continue;
        int class_checks = 0, class_failures = 0;
        for (int t = 0; t < opts.trials; ++t) {
            const int n = pick(rng, 2, 4), m = pick(rng, 1, 4);
            Game a = cls.generate(rng, n);
            Game b = cls.generate(rng, m);
            const int i = pick(rng, 1, n);
            bool inputs_ok = cls.member(a) && cls.member(b);
            Game c = partial_compose(a, i, b);
            bool ok = inputs_ok && cls.member(c);
            ++class_checks;
            if (!ok) ++class_failures;
            run.check(ok, [&] {
                json f = pair_fixture(a, i, b, "closure failure: " + cls.name);
                f["inputs_in_class"] = inputs_ok;
                f["composite"] = game_to_json(c);
                return f;
            });
        }
        per_class[cls.name] = json{{"checks", class_checks}, {"failures", class_failures}};
    }
    if (!opts.klass.empty() && per_class.empty())
        fail(Errc::parse_error, "unknown closure class: " + opts.klass);

    return run.finish(opts, json{{"classes", per_class}});
}

// ---- shapley-composite -----------------------------------------------------

VerifyResult suite_shapley_composite(const VerifyOptions& opts) {
    Rng rng(opts.seed);
    SuiteRun run("shapley-composite");

    for (int t = 0; t < opts.trials; ++t) {
        const int n = pick(rng, 2, 3), m = pick(rng, 1, 3);
        const int i = pick(rng, 1, n);
        Game a = gen::random_normalized(rng, n);
        Game b = gen::random_normalized(rng, m);
        Allocation formula = composite_shapley(a, i, b);
        Allocation direct = shapley(partial_compose(a, i, b));
        run.check(formula == direct,
                  [&] { return pair_fixture(a, i, b, "composite Shapley formula mismatch"); });

        // efficiency on the composite
        run.check(direct.total() == 1, [&] {
            return pair_fixture(a, i, b, "Shapley efficiency violated on composite");
        });
    }

    // the Mobius form agrees with the permutation average
    for (int t = 0; t < std::min(opts.trials, 60); ++t) {
        const int n = pick(rng, 1, 5);
        Game g = gen::random_game(rng, n);
        run.check(shapley(g) == shapley_by_permutations(g), [&] {
            return json{{"note", "Shapley forms disagree"}, {"game", game_to_json(g)}};
        });
    }

    return run.finish(opts);
}

// ---- banzhaf-composite (report only) ----------------------------------------

VerifyResult suite_banzhaf_composite(const VerifyOptions& opts) {
    Rng rng(opts.seed);
    SuiteRun run("banzhaf-composite");
    run.result.report_only = true;

    int additive_checked = 0, additive_matched = 0;
    int single_checked = 0, single_matched = 0;
    json general = json::array();

    for (int t = 0; t < opts.trials; ++t) {
        // additive-component regime: standard form, no divisor, exact equality
        {
            const int n = pick(rng, 1, 3), m = pick(rng, 1, 3);
            const int i = pick(rng, 1, n);
            Game a = gen::random_game(rng, n);
            Game b = additive_from_vector(gen::random_allocation(rng, numbered_players(m)));
            Allocation lhs = banzhaf(partial_compose(a, i, b));
            Allocation rhs = composite_banzhaf_rhs(a, i, b, BanzhafVariant::standard, false);
            ++additive_checked;
            if (lhs == rhs) ++additive_matched;
        }
        // single-player component regime
        {
            const int n = pick(rng, 1, 3);
            const int i = pick(rng, 1, n);
            Game a = gen::random_game(rng, n);
            Game b = gen::random_game(rng, 1);
            Allocation lhs = banzhaf(partial_compose(a, i, b));
            Allocation rhs = composite_banzhaf_rhs(a, i, b, BanzhafVariant::standard, false);
            ++single_checked;
            if (lhs == rhs) ++single_matched;
        }
        // general instances, reported with both variants of the right side
        if (t < 10) {
            const int n = pick(rng, 1, 3), m = pick(rng, 2, 3);
            const int i = pick(rng, 1, n);
            Game a = gen::random_game(rng, n);
            Game b = gen::random_game(rng, m);
            Allocation lhs = banzhaf(partial_compose(a, i, b));
            Allocation rhs_standard = composite_banzhaf_rhs(a, i, b, BanzhafVariant::standard, false);
            Allocation rhs_theorem =
                composite_banzhaf_rhs(a, i, b, BanzhafVariant::unanimity_scaled, true);
            general.push_back(json{{"host", game_to_json(a)},
                                   {"guest", game_to_json(b)},
                                   {"at", i},
                                   {"lhs_banzhaf", allocation_to_json(lhs)},
                                   {"rhs_standard_no_divisor", allocation_to_json(rhs_standard)},
                                   {"rhs_theorem_form", allocation_to_json(rhs_theorem)},
                                   {"standard_matches", lhs == rhs_standard},
                                   {"theorem_matches", lhs == rhs_theorem}});
        }
    }

    // the d_1 o_1 B discrepancy fixture
    Game d1 = dictator(1);
    Game b2 = relabel(bargaining(), PlayerSet({"a", "b"}));
    Game composite = partial_compose(d1, 1, b2);
    json fixture{{"composite", game_to_json(composite)},
                 {"banzhaf", allocation_to_json(banzhaf(composite))},
                 {"banzhaf_unanimity_scaled", allocation_to_json(banzhaf_unanimity_scaled(composite))},
                 {"rhs_theorem_form", allocation_to_json(composite_banzhaf_rhs(
                                          d1, 1, b2, BanzhafVariant::unanimity_scaled, true))},
                 {"rhs_standard_no_divisor", allocation_to_json(composite_banzhaf_rhs(
                                                 d1, 1, b2, BanzhafVariant::standard, false))}};

    json extra{{"additive_regime", json{{"checked", additive_checked}, {"matched", additive_matched}}},
               {"single_player_regime", json{{"checked", single_checked}, {"matched", single_matched}}},
               {"additive_regime_ok", additive_checked == additive_matched},
               {"single_player_regime_ok", single_checked == single_matched},
               {"general_instances", general},
               {"d1_o1_B_fixture", fixture}};
    return run.finish(opts, std::move(extra));
}

// ---- core-tensor -------------------------------------------------------------

std::optional<Allocation> sample_core_point(const Game& g, Rng& rng) {
    const int n = g.num_players();
    LinearProgram lp;
    lp.num_vars = n;
    lp.objective.resize(n);
    for (auto& c : lp.objective) c = gen::random_rational(rng, -3, 3);
    for (Coalition s = 1; s < g.values().size(); ++s) {
        LinearConstraint row;
        row.coeffs.assign(n, Rational(0));
        for (int k = 0; k < n; ++k)
            if (s & (Coalition{1} << k)) row.coeffs[k] = 1;
        row.rel = s + 1 == g.values().size() ? Relation::eq : Relation::ge;
        row.rhs = g.value(s);
        lp.constraints.push_back(std::move(row));
    }
    LpOutcome out = solve(lp);
    if (!is_optimal(out)) return std::nullopt;
    return Allocation(g.players(), optimal(out).point);
}

Allocation random_imputation(Rng& rng, const ImputationSimplex& simplex) {
    // random rational convex combination of the vertices
    std::vector<Rational> weights(simplex.vertices.size());
    Rational total = 0;
    for (auto& w : weights) {
        w = gen::random_nonneg_rational(rng, 3);
        total += w;
    }
    if (total == 0) weights[0] = total = 1;
    std::vector<Rational> coords(simplex.players.size(), Rational(0));
    for (std::size_t v = 0; v < simplex.vertices.size(); ++v)
        for (int k = 0; k < simplex.players.size(); ++k)
            coords[k] += weights[v] * simplex.vertices[v].coords[k];
    for (auto& c : coords) c /= total;
    return Allocation(simplex.players, std::move(coords));
}

VerifyResult suite_core_tensor(const VerifyOptions& opts) {
    Rng rng(opts.seed);
    SuiteRun run("core-tensor");

    // marginal vectors compose through the partial tensor product
    for (int t = 0; t < opts.trials; ++t) {
        const int n = pick(rng, 1, 4), m = pick(rng, 1, 4);
        const int i = pick(rng, 1, n);
        Game a = gen::random_game(rng, n), b = gen::random_game(rng, m);
        std::vector<int> sigma = random_order(rng, n), tau = random_order(rng, m);
        Allocation tensored =
            partial_tensor(marginal_vector(a, sigma), i, marginal_vector(b, tau));
        std::vector<int> composite_order;
        for (int step : sigma) {
            if (step == i - 1)
                for (int bstep : tau) composite_order.push_back(i - 1 + bstep);
            else
                composite_order.push_back(step < i - 1 ? step : step + m - 1);
        }
        Allocation direct = marginal_vector(partial_compose(a, i, b), composite_order);
        run.check(tensored.coords == direct.coords,
                  [&] { return pair_fixture(a, i, b, "marginal-vector composition mismatch"); });
    }

    // imputations tensor into imputations of the composite
    for (int t = 0; t < opts.trials; ++t) {
        const int n = pick(rng, 1, 4), m = pick(rng, 1, 4);
        const int i = pick(rng, 1, n);
        Game a = gen::random_capacity(rng, n), b = gen::random_capacity(rng, m);
        ImputationSimplex ia = imputation_vertices(a), ib = imputation_vertices(b);
        if (ia.empty || ib.empty || ia.vertices.empty() || ib.vertices.empty()) continue;
        Allocation x = random_imputation(rng, ia), y = random_imputation(rng, ib);
        Game c = partial_compose(a, i, b);
        Allocation z = partial_tensor(x, i, y);
        run.check(is_imputation(c, z),
                  [&] { return pair_fixture(a, i, b, "imputation tensor escaped the simplex"); });

        // injectivity via reconstruction when a({i}) > 0 and b(B) > 0
        if (a.value(Coalition{1} << (i - 1)) > 0 && b.grand_value() > 0) {
            const Rational bb = b.grand_value();
            std::vector<Rational> xr(n), yr(m);
            Rational zb = 0;
            for (int kk = 0; kk < m; ++kk) zb += z.coords[i - 1 + kk];
            xr[i - 1] = zb / bb;
            for (int kk = 0; kk < n; ++kk) {
                if (kk == i - 1) continue;
                xr[kk] = z.coords[kk < i - 1 ? kk : kk + m - 1] / bb;
            }
            bool ok = xr == x.coords;
            if (xr[i - 1] != 0) {
                for (int kk = 0; kk < m; ++kk) yr[kk] = z.coords[i - 1 + kk] / xr[i - 1];
                ok = ok && yr == y.coords;
            }
            run.check(ok, [&] { return pair_fixture(a, i, b, "tensor reconstruction failed"); });
        }
    }

    // core points tensor into the composite core
    for (int t = 0; t < opts.trials; ++t) {
        const int n = pick(rng, 2, 4), m = pick(rng, 1, 4);
        const int i = pick(rng, 1, n);
        Game a = gen::random_balanced_capacity(rng, n);
        Game b = gen::random_balanced_capacity(rng, m);
        BalancedResult ra = balanced_certificate(a), rb = balanced_certificate(b);
        if (!ra.balanced || !rb.balanced) {
            run.check(false, [&] { return pair_fixture(a, i, b, "generator left its class"); });
            continue;
        }
        Game c = partial_compose(a, i, b);
        Allocation z = partial_tensor(*ra.core_point, i, *rb.core_point);
        run.check(core_contains(c, z),
                  [&] { return pair_fixture(a, i, b, "core tensor escaped the core"); });
    }

    // decomposition of composite core points under the surjectivity hypotheses
    const int decomposition_trials = std::min(opts.trials, 20);
    for (int t = 0; t < decomposition_trials; ++t) {
        const int n = pick(rng, 2, 3), m = pick(rng, 1, 3);
        const int i = pick(rng, 1, n);
        Game a = [&] {
            Game base = gen::random_capacity(rng, n);
            std::vector<Rational> values = base.values();
            values[Coalition{1} << (i - 1)] = 0; // a({i}) = 0
            return Game(base.players(), std::move(values), true);
        }();
        Game b = [&] {
            Game base = gen::random_capacity(rng, m);
            std::vector<Rational> values = base.values();
            for (int kk = 0; kk < m; ++kk) values[Coalition{1} << kk] = 0; // zero singletons
            if (values.back() == 0) values.back() = 1; // b(B) > 0
            return Game(base.players(), std::move(values), true);
        }();
        Game c = partial_compose(a, i, b);
        const bool a_balanced = is_balanced(a);
        const bool c_balanced = is_balanced(c);
        if (!a_balanced) {
            run.check(!c_balanced,
                      [&] { return pair_fixture(a, i, b, "empty core did not propagate"); });
            continue;
        }
        if (!c_balanced) continue;
        std::vector<Allocation> samples;
        if (auto z0 = balanced_certificate(c).core_point) samples.push_back(*z0);
        for (int extra = 0; extra < 2; ++extra)
            if (auto z = sample_core_point(c, rng)) samples.push_back(*z);
        const Rational bb = b.grand_value();
        for (const Allocation& z : samples) {
            std::vector<Rational> xr(n), yr(m, Rational(0));
            Rational zb = 0;
            for (int kk = 0; kk < m; ++kk) zb += z.coords[i - 1 + kk];
            xr[i - 1] = zb / bb;
            for (int kk = 0; kk < n; ++kk) {
                if (kk == i - 1) continue;
                xr[kk] = z.coords[kk < i - 1 ? kk : kk + m - 1] / bb;
            }
            if (xr[i - 1] != 0) {
                for (int kk = 0; kk < m; ++kk) yr[kk] = z.coords[i - 1 + kk] / xr[i - 1];
            } else {
                yr[0] = bb; // any imputation works when the block carries nothing
            }
            Allocation x(a.players(), xr), y(b.players(), yr);
            bool ok = core_contains(a, x) && is_imputation(b, y) &&
                      partial_tensor(x, i, y).coords == z.coords;
            run.check(ok, [&] {
                json f = pair_fixture(a, i, b, "core point does not decompose");
                f["point"] = allocation_to_json(z);
                return f;
            });
        }
    }

    return run.finish(opts);
}

} // namespace

std::vector<std::string> verify_suites() {
    return {"axioms",            "closure",        "duality",    "mobius",
            "shapley-composite", "banzhaf-composite", "core-tensor"};
}

VerifyResult run_verify(std::string_view suite, const VerifyOptions& opts) {
    if (suite == "axioms") return suite_axioms(opts);
    if (suite == "closure") return suite_closure(opts);
    if (suite == "duality") return suite_duality(opts);
    if (suite == "mobius") return suite_mobius(opts);
    if (suite == "shapley-composite") return suite_shapley_composite(opts);
    if (suite == "banzhaf-composite") return suite_banzhaf_composite(opts);
    if (suite == "core-tensor") return suite_core_tensor(opts);
    fail(Errc::parse_error, "unknown verify suite: " + std::string(suite));
}

} // namespace coop
