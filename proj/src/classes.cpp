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

#include "coop/classes.hpp"

#include <algorithm>

namespace coop {

namespace {

constexpr int kBalancedSizeCap = 12;

void set_witness(Witness* w, Witness value) {
    if (w) *w = std::move(value);
}

} // namespace

bool is_normalized(const Game& g, Witness* w) {
    if (g.grand_value() == 1) return true;
    set_witness(w, {"value",
                    {g.players().full_coalition()},
                    {g.grand_value()},
                    {},
                    "v(N) != 1"});
    return false;
}

bool is_nonnegative(const Game& g, Witness* w) {
    for (Coalition s = 0; s < g.values().size(); ++s) {
        if (g.value(s) < 0) {
            set_witness(w, {"value", {s}, {g.value(s)}, {}, "v(S) < 0"});
            return false;
        }
    }
    return true;
}

bool is_monotone(const Game& g, Witness* w) {
    for (int k = 0; k < g.num_players(); ++k) {
        const Coalition bit = Coalition{1} << k;
        for (Coalition s = 0; s < g.values().size(); ++s) {
            if ((s & bit) == 0 && g.value(s | bit) < g.value(s)) {
                set_witness(w, {"pair", {s, s | bit}, {g.value(s), g.value(s | bit)}, {},
                                "v(S) > v(S + i)"});
                return false;
            }
        }
    }
    return true;
}

bool is_capacity(const Game& g, Witness* w) {
    return is_nonnegative(g, w) && is_monotone(g, w);
}

bool is_simple(const Game& g, Witness* w) {
    for (Coalition s = 0; s < g.values().size(); ++s) {
        if (g.value(s) != 0 && g.value(s) != 1) {
            set_witness(w, {"value", {s}, {g.value(s)}, {}, "v(S) not in {0,1}"});
            return false;
        }
    }
    return true;
}

bool is_additive(const Game& g, Witness* w) {
    for (Coalition s = 0; s < g.values().size(); ++s) {
        Rational sum = 0;
        for (int k = 0; k < g.num_players(); ++k)
            if (s & (Coalition{1} << k)) sum += g.value(Coalition{1} << k);
        if (g.value(s) != sum) {
            set_witness(w, {"value", {s}, {g.value(s), sum}, {}, "v(S) != sum of singletons"});
            return false;
        }
    }
    return true;
}

bool is_k_monotone(const Game& g, int k, Witness* w) {
    if (k < 2) fail(Errc::bad_k, "k-monotonicity requires k >= 2");
    const int n = g.num_players();
    const int cap = std::min(k, n);
    const Coalition full = g.players().full_coalition();
    for (Coalition t = 1; t <= full && full != 0; ++t) {
        const int ts = coalition_size(t);
        if (ts < 2 || ts > cap) continue;
        Game d = derivative_coalition(g, t);
        for (Coalition s = 0; s < d.values().size(); ++s) {
            if (d.value(s) < 0) {
                set_witness(w, {"derivative",
                                {t, unpack_bits(s, full & ~t)},
                                {d.value(s)},
                                {},
                                "d_T v(S) < 0"});
                return false;
            }
        }
    }
    return true;
}

bool is_convex(const Game& g, Witness* w) { return is_k_monotone(g, 2, w); }

bool is_k_alternating(const Game& g, int k, Witness* w) {
    if (k < 2) fail(Errc::bad_k, "k-alternation requires k >= 2");
    const int n = g.num_players();
    const int cap = std::min(k, n);
    const Coalition full = g.players().full_coalition();
    for (Coalition t = 1; t <= full && full != 0; ++t) {
        const int ts = coalition_size(t);
        if (ts < 2 || ts > cap) continue;
        Game d = derivative_coalition(g, t);
        for (Coalition s = 0; s < d.values().size(); ++s) {
            if (d.value(s) > 0) {
                set_witness(w, {"derivative",
                                {t, unpack_bits(s, full & ~t)},
                                {d.value(s)},
                                {},
                                "d_T v(S) > 0"});
                return false;
            }
        }
    }
    return true;
}

bool is_totally_monotone(const Game& g, Witness* w) {
    return g.num_players() < 2 || is_k_monotone(g, g.num_players(), w);
}

bool is_totally_alternating(const Game& g, Witness* w) {
    return g.num_players() < 2 || is_k_alternating(g, g.num_players(), w);
}

LinearProgram core_lp(const Game& g) {
    const int n = g.num_players();
    LinearProgram lp;
    lp.num_vars = n;
    lp.objective.assign(n, Rational(1));
    for (Coalition s = 1; s < g.values().size(); ++s) {
        LinearConstraint row;
        row.coeffs.assign(n, Rational(0));
        for (int k = 0; k < n; ++k)
            if (s & (Coalition{1} << k)) row.coeffs[k] = 1;
        row.rel = Relation::ge;
        row.rhs = g.value(s);
        lp.constraints.push_back(std::move(row));
    }
    return lp;
}

LinearProgram core_lp_dual(const Game& g) {
    const int n = g.num_players();
    const auto vars = static_cast<int>(g.values().size()) - 1; // y_S per nonempty S
    LinearProgram lp;
    lp.num_vars = vars;
    lp.nonneg_vars = true;
    lp.objective.resize(vars);
    for (Coalition s = 1; s < g.values().size(); ++s) lp.objective[s - 1] = -g.value(s);
    for (int k = 0; k < n; ++k) {
        LinearConstraint row;
        row.coeffs.assign(vars, Rational(0));
        for (Coalition s = 1; s < g.values().size(); ++s)
            if (s & (Coalition{1} << k)) row.coeffs[s - 1] = 1;
        row.rel = Relation::eq;
        row.rhs = 1;
        lp.constraints.push_back(std::move(row));
    }
    return lp;
}

namespace {

/// Dual-side decision: the primal (min x(N) s.t. x(S) >= v(S)) is feasible
/// and bounded, so the dual over balanced weight systems attains the same
/// optimum with only n equality rows. Its optimal point is the violating
/// collection when the optimum exceeds v(N).
BalancedResult balanced_decision(const Game& g) {
    const int n = g.num_players();
    if (n > kBalancedSizeCap)
        fail(Errc::size_cap, "balancedness needs 2^n constraints; cap is n <= " +
                                 std::to_string(kBalancedSizeCap));
    BalancedResult out;
    if (n == 0) {
        out.balanced = g.value(0) == 0;
        out.lp_value = 0;
        if (out.balanced) out.core_point = Allocation(g.players(), {});
        return out;
    }
    LpOutcome dual_out = solve(core_lp_dual(g));
    if (!is_optimal(dual_out)) fail(Errc::internal, "core dual LP must be solvable");
    const auto& opt = optimal(dual_out);
    out.lp_value = -opt.value;
    out.balanced = out.lp_value == g.grand_value();
    if (!out.balanced) {
        for (Coalition s = 1; s < g.values().size(); ++s)
            if (opt.point[s - 1] != 0) out.collection.emplace_back(s, opt.point[s - 1]);
        // re-validate: weights cover every player once and beat v(N)
        Rational total = 0;
        std::vector<Rational> cover(n, Rational(0));
        for (const auto& [s, y] : out.collection) {
            total += y * g.value(s);
            for (int k = 0; k < n; ++k)
                if (s & (Coalition{1} << k)) cover[k] += y;
        }
        bool ok = total == out.lp_value && total > g.grand_value();
        for (const auto& c : cover) ok = ok && c == 1;
        if (!ok) fail(Errc::internal, "balanced-collection certificate fails re-validation");
    }
    return out;
}

} // namespace

BalancedResult balanced_certificate(const Game& g) {
    BalancedResult out = balanced_decision(g);
    if (out.balanced && !out.core_point) {
        // recover a core point from the primal at the same optimum
        LpOutcome primal_out = solve(core_lp(g));
        if (!is_optimal(primal_out) || optimal(primal_out).value != out.lp_value)
            fail(Errc::internal, "primal/dual optimum mismatch");
        Allocation point(g.players(), optimal(primal_out).point);
        for (Coalition s = 1; s < g.values().size(); ++s)
            if (point.of(s) < g.value(s)) fail(Errc::internal, "core point fails re-validation");
        out.core_point = std::move(point);
    }
    return out;
}

bool is_balanced(const Game& g, Witness* w) {
    BalancedResult res = balanced_decision(g);
    if (!res.balanced && w) {
        Witness wit;
        wit.kind = "lp-gap";
        wit.values = {res.lp_value, g.grand_value()};
        wit.collection = res.collection;
        wit.note = "balanced collection beats v(N)";
        *w = std::move(wit);
    }
    return res.balanced;
}

ClassReport analyze(const Game& g, int kmax) {
    ClassReport r;
    auto run = [&](const char* name, auto&& pred) {
        Witness w;
        bool ok = pred(&w);
        if (!ok) r.witnesses.emplace(name, std::move(w));
        return ok;
    };
    r.grounded = g.value(0) == 0;
    if (!r.grounded)
        r.witnesses.emplace("grounded", Witness{"value", {0}, {g.value(0)}, {}, "v(empty) != 0"});
    r.normalized = run("normalized", [&](Witness* w) { return is_normalized(g, w); });
    r.nonnegative = run("nonnegative", [&](Witness* w) { return is_nonnegative(g, w); });
    r.monotone = run("monotone", [&](Witness* w) { return is_monotone(g, w); });
    r.capacity = r.nonnegative && r.monotone;
    r.simple = run("simple", [&](Witness* w) { return is_simple(g, w); });
    r.additive = run("additive", [&](Witness* w) { return is_additive(g, w); });
    r.convex = run("convex", [&](Witness* w) { return is_convex(g, w); });
    const int top = std::max(2, std::min(kmax, std::max(2, g.num_players())));
    for (int k = 2; k <= top; ++k) {
        r.k_monotone[k] = run(("k_monotone(" + std::to_string(k) + ")").c_str(),
                              [&](Witness* w) { return is_k_monotone(g, k, w); });
        r.k_alternating[k] = run(("k_alternating(" + std::to_string(k) + ")").c_str(),
                                 [&](Witness* w) { return is_k_alternating(g, k, w); });
    }
    r.totally_monotone =
        run("totally_monotone", [&](Witness* w) { return is_totally_monotone(g, w); });
    r.totally_alternating =
        run("totally_alternating", [&](Witness* w) { return is_totally_alternating(g, w); });
    if (g.num_players() <= kBalancedSizeCap)
        r.balanced = run("balanced", [&](Witness* w) { return is_balanced(g, w); });
    return r;
}

namespace gen {

Rational random_rational(Rng& rng, int lo, int hi) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 4);
    return make_rational(num(rng), den(rng));
}

Rational random_nonneg_rational(Rng& rng, int hi) { return random_rational(rng, 0, hi); }

Game random_game(Rng& rng, int n, bool grounded) {
    PlayerSet players = numbered_players(n);
    std::vector<Rational> values(players.num_coalitions());
    for (Coalition s = 0; s < values.size(); ++s) values[s] = random_rational(rng);
    if (grounded) values[0] = 0;
    return Game(std::move(players), std::move(values), grounded);
}

Game random_normalized(Rng& rng, int n) {
    Game g = random_game(rng, n);
    const Rational total = g.grand_value();
    std::vector<Rational> values = g.values();
    if (total == 0) {
        values.back() = 1;
    } else {
        for (auto& v : values) v /= total;
    }
    return Game(g.players(), std::move(values), true);
}

Game random_simple_monotone(Rng& rng, int n) {
    PlayerSet players = numbered_players(n);
    std::vector<Rational> values(players.num_coalitions(), Rational(0));
    std::uniform_int_distribution<int> coin(0, 3);
    for (Coalition s = 1; s < values.size(); ++s) {
        Rational floor = 0;
        for (int k = 0; k < n; ++k)
            if (s & (Coalition{1} << k)) floor = std::max(floor, values[s & ~(Coalition{1} << k)]);
        values[s] = floor == 1 ? Rational(1) : Rational(coin(rng) == 0 ? 1 : 0);
    }
    return Game(std::move(players), std::move(values), true);
}

Game random_capacity(Rng& rng, int n) {
    PlayerSet players = numbered_players(n);
    std::vector<Rational> values(players.num_coalitions(), Rational(0));
    for (Coalition s = 1; s < values.size(); ++s) {
        Rational floor = 0;
        for (int k = 0; k < n; ++k)
            if (s & (Coalition{1} << k)) floor = std::max(floor, values[s & ~(Coalition{1} << k)]);
        values[s] = floor + random_nonneg_rational(rng, 2);
    }
    return Game(std::move(players), std::move(values), true);
}

Game random_convex_nonneg(Rng& rng, int n) {
    PlayerSet players = numbered_players(n);
    std::vector<Rational> values(players.num_coalitions(), Rational(0));
    std::vector<Coalition> order;
    for (Coalition s = 1; s < values.size(); ++s) order.push_back(s);
    std::sort(order.begin(), order.end(), [](Coalition a, Coalition b) {
        return coalition_size(a) != coalition_size(b) ? coalition_size(a) < coalition_size(b)
                                                      : a < b;
    });
    for (Coalition s : order) {
        Rational floor = 0;
        // monotone floor plus every pairwise supermodularity bound
        for (int i = 0; i < n; ++i) {
            const Coalition bi = Coalition{1} << i;
            if (!(s & bi)) continue;
            if (values[s & ~bi] > floor) floor = values[s & ~bi];
            for (int j = i + 1; j < n; ++j) {
                const Coalition bj = Coalition{1} << j;
                if (!(s & bj)) continue;
                Rational bound = values[s & ~bi] + values[s & ~bj] - values[s & ~bi & ~bj];
                if (bound > floor) floor = bound;
            }
        }
        values[s] = floor + random_nonneg_rational(rng, 2);
    }
    return Game(std::move(players), std::move(values), true);
}

Game random_totally_monotone(Rng& rng, int n) {
    PlayerSet players = numbered_players(n);
    std::vector<Rational> coeffs(players.num_coalitions(), Rational(0));
    for (Coalition s = 1; s < coeffs.size(); ++s) coeffs[s] = random_nonneg_rational(rng, 2);
    return zeta(MobiusGame(std::move(players), std::move(coeffs)));
}

Game random_k_monotone_nonneg(Rng& rng, int n, int k) {
    if (k < 2) fail(Errc::bad_k, "k must be >= 2");
    std::uniform_int_distribution<int> noise(-1, 1);
    for (int attempt = 0; attempt < 512; ++attempt) {
        PlayerSet players = numbered_players(n);
        std::vector<Rational> coeffs(players.num_coalitions(), Rational(0));
        for (Coalition s = 1; s < coeffs.size(); ++s) {
            coeffs[s] = random_nonneg_rational(rng, 2);
            if (coalition_size(s) > k) coeffs[s] += make_rational(noise(rng), 2);
        }
        Game g = zeta(MobiusGame(std::move(players), std::move(coeffs)));
        if (is_nonnegative(g) && is_k_monotone(g, k)) return g;
    }
    // the noiseless base is always in class
    return random_totally_monotone(rng, n);
}

Game random_k_alternating_capacity(Rng& rng, int n, int k) {
    return dual(random_k_monotone_nonneg(rng, n, k));
}

Game random_balanced_capacity(Rng& rng, int n) {
    PlayerSet players = numbered_players(n);
    std::vector<Rational> base(n);
    for (auto& b : base) b = random_nonneg_rational(rng, 3);
    Game additive = additive_from_vector(Allocation(players, base));
    std::vector<Rational> values = additive.values();
    std::vector<Coalition> order;
    for (Coalition s = 1; s + 1 < values.size(); ++s) order.push_back(s);
    std::sort(order.begin(), order.end(), [](Coalition a, Coalition b) {
        return coalition_size(a) != coalition_size(b) ? coalition_size(a) < coalition_size(b)
                                                      : a < b;
    });
    for (Coalition s : order) {
        Rational floor = 0;
        for (int i = 0; i < n; ++i)
            if (s & (Coalition{1} << i)) floor = std::max(floor, values[s & ~(Coalition{1} << i)]);
        Rational target = values[s] - random_nonneg_rational(rng, 2);
        values[s] = std::max(floor, target);
    }
    return Game(std::move(players), std::move(values), true);
}

Allocation random_allocation(Rng& rng, const PlayerSet& players, bool nonneg) {
    std::vector<Rational> coords(players.size());
    for (auto& c : coords) c = nonneg ? random_nonneg_rational(rng) : random_rational(rng);
    return Allocation(players, std::move(coords));
}

} // namespace gen

} // namespace coop
