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

// Independent oracles for the test suites. Everything here is the slow,
// definition-level route; the library must agree with it exactly.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "coop/game.hpp"

namespace coop::testing {

/// Alternating-sum Mobius coefficient, straight from the definition.
inline Rational mobius_brute(const Game& g, Coalition s) {
    Rational total = 0;
    const int ssize = coalition_size(s);
    Coalition t = s;
    while (true) {
        if ((ssize - coalition_size(t)) % 2 == 0)
            total += g.value(t);
        else
            total -= g.value(t);
        if (t == 0) break;
        t = (t - 1) & s;
    }
    return total;
}

/// Subset-sum Zeta value, straight from the definition.
inline Rational zeta_brute(const std::vector<Rational>& coeffs, Coalition s) {
    Rational total = 0;
    Coalition t = s;
    while (true) {
        total += coeffs[t];
        if (t == 0) break;
        t = (t - 1) & s;
    }
    return total;
}

/// Product-form multilinear extension sum_S v(S) prod x_i prod (1 - x_i).
inline Rational eval_product_form(const Game& g, const std::vector<Rational>& x) {
    Rational total = 0;
    for (Coalition s = 0; s < g.values().size(); ++s) {
        Rational term = g.value(s);
        if (term == 0) continue;
        for (int k = 0; k < g.num_players(); ++k)
            term *= (s & (Coalition{1} << k)) ? x[k] : 1 - x[k];
        total += term;
    }
    return total;
}

/// Shapley value through the derivative-weight form
/// sum_S |S|! (n-1-|S|)! / n! * (v(S+i) - v(S)).
inline std::vector<Rational> shapley_weight_oracle(const Game& g) {
    const int n = g.num_players();
    mpz_class nfact = 1;
    for (int k = 2; k <= n; ++k) nfact *= k;
    std::vector<mpz_class> fact(n + 1, mpz_class(1));
    for (int k = 1; k <= n; ++k) fact[k] = fact[k - 1] * k;
    std::vector<Rational> out(n, Rational(0));
    for (int i = 0; i < n; ++i) {
        const Coalition bit = Coalition{1} << i;
        for (Coalition s = 0; s < g.values().size(); ++s) {
            if (s & bit) continue;
            const int ssz = coalition_size(s);
            Rational weight(fact[ssz] * fact[n - 1 - ssz], nfact);
            weight.canonicalize();
            out[i] += weight * (g.value(s | bit) - g.value(s));
        }
    }
    return out;
}

/// Banzhaf through the Mobius form sum_{T owning i} mu_T 2^(1-|T|).
inline std::vector<Rational> banzhaf_mobius_oracle(const Game& g) {
    const int n = g.num_players();
    std::vector<Rational> mu(g.values().size());
    for (Coalition s = 0; s < g.values().size(); ++s) mu[s] = mobius_brute(g, s);
    std::vector<Rational> out(n, Rational(0));
    for (Coalition s = 1; s < g.values().size(); ++s) {
        if (mu[s] == 0) continue;
        Rational weight = make_rational(2, 1L << coalition_size(s));
        for (int i = 0; i < n; ++i)
            if (s & (Coalition{1} << i)) out[i] += weight * mu[s];
    }
    return out;
}

/// Bondareva-Shapley by the known minimal balanced collections, n <= 3.
inline bool balanced_small_oracle(const Game& g) {
    const int n = g.num_players();
    const Rational& total = g.grand_value();
    if (n <= 1) return true;
    if (n == 2) return g.value(0b01) + g.value(0b10) <= total;
    if (n == 3) {
        if (g.value(0b001) + g.value(0b110) > total) return false;
        if (g.value(0b010) + g.value(0b101) > total) return false;
        if (g.value(0b100) + g.value(0b011) > total) return false;
        if (g.value(0b001) + g.value(0b010) + g.value(0b100) > total) return false;
        Rational half(1, 2);
        return half * (g.value(0b011) + g.value(0b101) + g.value(0b110)) <= total;
    }
    throw std::logic_error("oracle limited to n <= 3");
}

/// Exact row rank by Gaussian elimination over the rationals.
inline int exact_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    int rank = 0;
    std::size_t lead = 0;
    for (std::size_t r = 0; r < rows.size() && lead < cols; ++lead) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][lead] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        const Rational p = rows[r][lead];
        for (auto& v : rows[r]) v /= p;
        for (std::size_t other = 0; other < rows.size(); ++other) {
            if (other == r || rows[other][lead] == 0) continue;
            const Rational f = rows[other][lead];
            for (std::size_t c = 0; c < cols; ++c) rows[other][c] -= f * rows[r][c];
        }
        ++rank;
        ++r;
    }
    return rank;
}

inline Game game_of(std::vector<std::string> labels,
                    std::map<std::string, std::string> entries, bool grounded = true) {
    return new_game(labels, entries, grounded);
}

inline Allocation alloc_of(const PlayerSet& players, std::vector<std::string> values) {
    std::vector<Rational> coords;
    for (const auto& v : values) coords.push_back(parse_rational(v));
    return Allocation(players, std::move(coords));
}

} // namespace coop::testing
