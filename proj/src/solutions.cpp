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

#include "coop/solutions.hpp"

#include <algorithm>
#include <numeric>

#include "coop/operad.hpp"

namespace coop {

bool is_preimputation(const Game& g, const Allocation& x) {
    if (x.players != g.players()) return false;
    return x.total() == g.grand_value();
}

bool is_imputation(const Game& g, const Allocation& x) {
    if (!is_preimputation(g, x)) return false;
    for (int k = 0; k < g.num_players(); ++k)
        if (x.coords[k] < g.value(Coalition{1} << k)) return false;
    return true;
}

ImputationSimplex imputation_vertices(const Game& g) {
    if (!is_nonnegative(g)) fail(Errc::negative_game, "imputation vertices need a non-negative game");
    ImputationSimplex out;
    out.players = g.players();
    const Rational surplus = cooperative_surplus(g);
    if (surplus < 0) {
        out.empty = true;
        return out;
    }
    const int n = g.num_players();
    std::vector<Rational> base(n);
    for (int k = 0; k < n; ++k) base[k] = g.value(Coalition{1} << k);
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> coords = base;
        coords[i] += surplus;
        Allocation vertex(g.players(), std::move(coords));
        if (std::find(out.vertices.begin(), out.vertices.end(), vertex) == out.vertices.end())
            out.vertices.push_back(std::move(vertex));
    }
    if (n == 0) out.empty = g.value(0) != 0;
    return out;
}

Allocation marginal_vector(const Game& g, const std::vector<int>& order0) {
    const int n = g.num_players();
    if (static_cast<int>(order0.size()) != n) fail(Errc::not_a_permutation, "wrong length");
    std::vector<bool> seen(n, false);
    for (int p : order0) {
        if (p < 0 || p >= n || seen[p]) fail(Errc::not_a_permutation, "not an ordering of the players");
        seen[p] = true;
    }
    std::vector<Rational> coords(n);
    Coalition formed = 0;
    for (int p : order0) {
        const Coalition bit = Coalition{1} << p;
        coords[p] = g.value(formed | bit) - g.value(formed);
        formed |= bit;
    }
    return Allocation(g.players(), std::move(coords));
}

Allocation marginal_vector(const Game& g, const std::vector<std::string>& order) {
    std::vector<int> order0;
    order0.reserve(order.size());
    for (const auto& l : order) order0.push_back(g.players().require_position(l));
    return marginal_vector(g, order0);
}

bool core_contains(const Game& g, const Allocation& x) {
    if (x.players != g.players()) return false;
    if (x.total() != g.grand_value()) return false;
    for (Coalition s = 1; s < g.values().size(); ++s)
        if (x.of(s) < g.value(s)) return false;
    return true;
}

bool core_is_empty(const Game& g) { return !is_balanced(g); }

CoreDescription core_description(const Game& g) {
    BalancedResult res = balanced_certificate(g);
    CoreDescription out;
    out.players = g.players();
    out.empty = !res.balanced;
    out.lp_value = res.lp_value;
    if (res.balanced)
        out.point = res.core_point;
    else
        out.collection = res.collection;
    return out;
}

CoreDescription core_vertices_convex(const Game& g) {
    if (!is_convex(g) || !is_nonnegative(g))
        fail(Errc::not_convex, "vertex enumeration covers convex non-negative games");
    const int n = g.num_players();
    if (n > 8) fail(Errc::size_cap, "n! order enumeration capped at n <= 8");

    CoreDescription out;
    out.players = g.players();
    out.empty = false;
    out.lp_value = g.grand_value();
    std::vector<Allocation> vertices;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
        Allocation m = marginal_vector(g, order);
        if (!core_contains(g, m)) fail(Errc::internal, "marginal vector escaped the core");
        if (std::find(vertices.begin(), vertices.end(), m) == vertices.end())
            vertices.push_back(std::move(m));
    } while (std::next_permutation(order.begin(), order.end()));
    if (!vertices.empty()) out.point = vertices.front();
    out.vertices = std::move(vertices);
    return out;
}

Allocation shapley(const Game& g) {
    MobiusGame m = mobius(g);
    const int n = g.num_players();
    std::vector<Rational> coords(n, Rational(0));
    for (Coalition s = 1; s < m.coeffs().size(); ++s) {
        if (m.coeff(s) == 0) continue;
        const Rational share = m.coeff(s) / coalition_size(s);
        for (int k = 0; k < n; ++k)
            if (s & (Coalition{1} << k)) coords[k] += share;
    }
    return Allocation(g.players(), std::move(coords));
}

Allocation shapley_by_permutations(const Game& g) {
    const int n = g.num_players();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<Rational> sum(n, Rational(0));
    long count = 0;
    do {
        Allocation m = marginal_vector(g, order);
        for (int k = 0; k < n; ++k) sum[k] += m.coords[k];
        ++count;
    } while (std::next_permutation(order.begin(), order.end()));
    for (auto& v : sum) v /= count;
    return Allocation(g.players(), std::move(sum));
}

Allocation composite_shapley(const Game& ga, int pos1, const Game& gb) {
    if (ga.grand_value() != 1 || gb.grand_value() != 1)
        fail(Errc::not_normalized, "the composite Shapley formula assumes normalized games");
    const int ip = pos1 - 1;
    const int na = ga.num_players();
    const int nb = gb.num_players();
    if (ip < 0 || ip >= na) fail(Errc::index_out_of_range, "composition position");
    const Coalition bit = Coalition{1} << ip;

    MobiusGame ma = mobius(ga);
    MobiusGame mb = mobius(gb);
    PlayerSet players = compose_player_sets(ga.players(), pos1, gb.players());
    std::vector<Rational> coords(players.size(), Rational(0));

    // players of B: sum over S owning i, T owning j of mu_S mu_T / |S <> T|
    for (Coalition s = bit; s < ma.coeffs().size(); ++s) {
        if (!(s & bit) || ma.coeff(s) == 0) continue;
        for (Coalition t = 1; t < mb.coeffs().size(); ++t) {
            if (mb.coeff(t) == 0) continue;
            const Rational term =
                ma.coeff(s) * mb.coeff(t) / (coalition_size(s) - 1 + coalition_size(t));
            for (int k = 0; k < nb; ++k)
                if (t & (Coalition{1} << k)) coords[ip + k] += term;
        }
    }

    // players of A minus i: Shapley of the restriction plus the joint terms
    if (na > 1) {
        Allocation restricted = shapley(restrict_to(ga, ga.players().full_coalition() & ~bit));
        for (int k = 0; k < na; ++k) {
            if (k == ip) continue;
            const int out_pos = k < ip ? k : k + nb - 1;
            coords[out_pos] = restricted.coords[k < ip ? k : k - 1];
        }
        for (Coalition s = 0; s < ma.coeffs().size(); ++s) {
            if (!(s & bit) || (s & ~bit) == 0 || ma.coeff(s) == 0) continue;
            Rational tsum = 0;
            for (Coalition t = 0; t < mb.coeffs().size(); ++t) {
                if (mb.coeff(t) == 0) continue;
                tsum += mb.coeff(t) / (coalition_size(s) - 1 + coalition_size(t));
            }
            for (int k = 0; k < na; ++k) {
                if (k == ip || !(s & (Coalition{1} << k))) continue;
                const int out_pos = k < ip ? k : k + nb - 1;
                coords[out_pos] += ma.coeff(s) * tsum;
            }
        }
    }
    return Allocation(std::move(players), std::move(coords));
}

Allocation banzhaf(const Game& g) {
    const int n = g.num_players();
    std::vector<Rational> coords(n, Rational(0));
    const Rational weight = n == 0 ? Rational(1) : make_rational(1, 1L << (n - 1));
    for (int k = 0; k < n; ++k) {
        const Coalition bit = Coalition{1} << k;
        Rational total = 0;
        for (Coalition s = 0; s < g.values().size(); ++s)
            if (!(s & bit)) total += g.value(s | bit) - g.value(s);
        coords[k] = weight * total;
    }
    return Allocation(g.players(), std::move(coords));
}

Allocation banzhaf_unanimity_scaled(const Game& g) {
    MobiusGame m = mobius(g);
    const int n = g.num_players();
    std::vector<Rational> coords(n, Rational(0));
    const Rational weight = n == 0 ? Rational(1) : make_rational(1, 1L << (n - 1));
    for (Coalition s = 1; s < m.coeffs().size(); ++s) {
        if (m.coeff(s) == 0) continue;
        const Rational term = weight * m.coeff(s);
        for (int k = 0; k < n; ++k)
            if (s & (Coalition{1} << k)) coords[k] += term;
    }
    return Allocation(g.players(), std::move(coords));
}

Allocation composite_banzhaf_rhs(const Game& ga, int pos1, const Game& gb,
                                 BanzhafVariant variant, bool with_divisor) {
    Allocation psi = variant == BanzhafVariant::standard ? banzhaf(ga)
                                                         : banzhaf_unanimity_scaled(ga);
    Allocation rhs = partial_tensor(psi, pos1, shapley(gb));
    if (with_divisor && gb.num_players() > 1) {
        const Rational divisor = make_rational(1, 1L << (gb.num_players() - 1));
        for (auto& c : rhs.coords) c *= divisor;
    }
    return rhs;
}

} // namespace coop
