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

#include "coop/multilinear.hpp"

#include "coop/operad.hpp"

namespace coop {

MultilinearPoly::MultilinearPoly(PlayerSet vars, std::map<Coalition, Rational> coeffs)
    : vars_(std::move(vars)), coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->first >= vars_.num_coalitions())
            fail(Errc::index_out_of_range, "monomial outside the variable set");
        it = it->second == 0 ? coeffs_.erase(it) : std::next(it);
    }
}

Rational MultilinearPoly::coeff(Coalition s) const {
    auto it = coeffs_.find(s);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

MultilinearPoly extension(const Game& g) {
    MobiusGame m = mobius(g);
    std::map<Coalition, Rational> coeffs;
    for (Coalition s = 0; s < m.coeffs().size(); ++s)
        if (m.coeff(s) != 0) coeffs.emplace(s, m.coeff(s));
    return MultilinearPoly(g.players(), std::move(coeffs));
}

Rational eval(const MultilinearPoly& p, const Allocation& x) {
    if (x.size() != p.num_vars())
        fail(Errc::dimension_mismatch, "point dimension does not match the variable count");
    Rational total = 0;
    for (const auto& [s, c] : p.coeffs()) {
        Rational monomial = c;
        for (int k = 0; k < p.num_vars(); ++k)
            if (s & (Coalition{1} << k)) monomial *= x.coords[k];
        total += monomial;
    }
    return total;
}

MultilinearPoly substitute(const MultilinearPoly& f, int pos1, const MultilinearPoly& g) {
    if (pos1 < 1 || pos1 > f.num_vars()) fail(Errc::index_out_of_range, "variable position");
    PlayerSet vars;
    try {
        vars = compose_player_sets(f.vars(), pos1, g.vars());
    } catch (const Error& e) {
        if (e.code() == Errc::label_collision) fail(Errc::variable_collision, e.what());
        throw;
    }
    const int ip = pos1 - 1;
    const int m = g.num_vars();
    const Coalition low = (Coalition{1} << ip) - 1;
    auto place = [&](Coalition s, Coalition t) {
        return (s & low) | (t << ip) | ((s >> (ip + 1)) << (ip + m));
    };

    std::map<Coalition, Rational> coeffs;
    auto add = [&](Coalition s, const Rational& c) {
        auto [it, inserted] = coeffs.emplace(s, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs.erase(it);
        }
    };
    for (const auto& [s, c] : f.coeffs()) {
        if (s & (Coalition{1} << ip)) {
            const Coalition rest = s & ~(Coalition{1} << ip);
            for (const auto& [t, d] : g.coeffs()) add(place(rest, t), c * d);
        } else {
            add(place(s, 0), c);
        }
    }
    return MultilinearPoly(std::move(vars), std::move(coeffs));
}

MultilinearPoly substitute(const MultilinearPoly& f, std::string_view var,
                           const MultilinearPoly& g) {
    return substitute(f, f.vars().require_position(var) + 1, g);
}

Game poly_to_game(const MultilinearPoly& p) {
    std::vector<Rational> coeffs(p.vars().num_coalitions(), Rational(0));
    for (const auto& [s, c] : p.coeffs()) coeffs[s] = c;
    return zeta(MobiusGame(p.vars(), std::move(coeffs)));
}

std::string to_string(const MultilinearPoly& p) {
    if (p.coeffs().empty()) return "0";
    std::string out;
    for (const auto& [s, c] : p.coeffs()) {
        const bool first = out.empty();
        Rational shown = c;
        if (!first) {
            out += c < 0 ? " - " : " + ";
            if (c < 0) shown = -c;
        }
        if (s == 0) {
            out += to_string(shown);
            continue;
        }
        if (shown != 1) out += to_string(shown) + "*";
        out += "x{" + p.vars().coalition_key(s) + "}";
    }
    return out;
}

} // namespace coop
