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

#include <map>
#include <string>

#include "coop/game.hpp"

namespace coop {

/// Multilinear polynomial over named variables, stored sparsely by the
/// subset of variables appearing in each monomial.
class MultilinearPoly {
public:
    MultilinearPoly(PlayerSet vars, std::map<Coalition, Rational> coeffs);

    const PlayerSet& vars() const { return vars_; }
    int num_vars() const { return vars_.size(); }
    /// Coefficient of the monomial x_S (0 when absent).
    Rational coeff(Coalition s) const;
    const std::map<Coalition, Rational>& coeffs() const { return coeffs_; }

    bool operator==(const MultilinearPoly& other) const {
        return vars_ == other.vars_ && coeffs_ == other.coeffs_;
    }

private:
    PlayerSet vars_;
    std::map<Coalition, Rational> coeffs_; // nonzero entries only
};

/// Owen's multilinear extension: coefficients are the Mobius transform, so
/// f(e^S) = v(S) at every 0/1 vertex.
MultilinearPoly extension(const Game& g);

/// Exact evaluation of the Mobius-monomial form at a rational point.
Rational eval(const MultilinearPoly& p, const Allocation& x);

/// Replaces variable `var` of f by g and expands. This is plain function
/// composition; it matches the game composition only on normalized games
/// (the unanimity-basis composition is the general rule).
MultilinearPoly substitute(const MultilinearPoly& f, std::string_view var,
                           const MultilinearPoly& g);
MultilinearPoly substitute(const MultilinearPoly& f, int pos1, const MultilinearPoly& g);

/// Inverse of extension: reads coefficients as Mobius data and applies Zeta.
Game poly_to_game(const MultilinearPoly& p);

/// Deterministic rendering, e.g. "1/2*x{a1,a2} + x{b1}"; subsets ascend by
/// bitmask over the variable order.
std::string to_string(const MultilinearPoly& p);

} // namespace coop
