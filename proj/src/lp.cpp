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

#include "coop/lp.hpp"

#include "coop/error.hpp"

namespace coop {

namespace {

// Full-tableau simplex state. Free variables are split into positive and
// negative parts; every row gets an artificial column for phase 1.
struct Tableau {
    int n = 0;            // original variables
    int num_ge = 0;       // surplus columns
    int cols = 0;         // total structural columns (split + surplus + artificial)
    int art_start = 0;    // first artificial column
    std::vector<std::vector<Rational>> rows; // m rows, cols+1 entries (rhs last)
    std::vector<Rational> obj;               // cols+1 entries, reduced costs + (-z)
    std::vector<int> basis;                  // basic column per row

    int num_rows() const { return static_cast<int>(rows.size()); }

    void pivot(int lr, int ec) {
        auto& prow = rows[lr];
        const Rational p = prow[ec];
        for (auto& v : prow) v /= p;
        for (int r = 0; r < num_rows(); ++r) {
            if (r == lr || rows[r][ec] == 0) continue;
            const Rational f = rows[r][ec];
            for (int c = 0; c <= cols; ++c) rows[r][c] -= f * prow[c];
        }
        if (obj[ec] != 0) {
            const Rational f = obj[ec];
            for (int c = 0; c <= cols; ++c) obj[c] -= f * prow[c];
        }
        basis[lr] = ec;
    }

    /// Bland's rule iteration until optimal; returns false on unboundedness.
    bool run(bool allow_artificial) {
        const int limit = allow_artificial ? cols : art_start;
        while (true) {
            int ec = -1;
            for (int c = 0; c < limit; ++c) {
                if (obj[c] < 0) { ec = c; break; }
            }
            if (ec < 0) return true;
            int lr = -1;
            Rational best;
            for (int r = 0; r < num_rows(); ++r) {
                if (rows[r][ec] <= 0) continue;
                Rational ratio = rows[r][cols] / rows[r][ec];
                if (lr < 0 || ratio < best || (ratio == best && basis[r] < basis[lr])) {
                    lr = r;
                    best = ratio;
                }
            }
            if (lr < 0) return false;
            pivot(lr, ec);
        }
    }

    void load_costs(const std::vector<Rational>& cost) {
        obj.assign(cols + 1, Rational(0));
        for (int c = 0; c < cols; ++c) obj[c] = cost[c];
        for (int r = 0; r < num_rows(); ++r) {
            const Rational cb = cost[basis[r]];
            if (cb == 0) continue;
            for (int c = 0; c <= cols; ++c) obj[c] -= cb * rows[r][c];
        }
    }
};

} // namespace

LpOutcome solve(const LinearProgram& lp) {
    if (lp.num_vars < 0) fail(Errc::malformed_program, "negative variable count");
    if (static_cast<int>(lp.objective.size()) != lp.num_vars)
        fail(Errc::malformed_program, "objective length does not match variable count");
    for (const auto& c : lp.constraints)
        if (static_cast<int>(c.coeffs.size()) != lp.num_vars)
            fail(Errc::malformed_program, "constraint row length does not match variable count");

    const int n = lp.num_vars;
    const int m = static_cast<int>(lp.constraints.size());
    const int phys = lp.nonneg_vars ? n : 2 * n; // split free variables
    Tableau t;
    t.n = n;
    for (const auto& c : lp.constraints)
        if (c.rel == Relation::ge) ++t.num_ge;
    t.art_start = phys + t.num_ge;
    t.cols = t.art_start + m;

    t.rows.assign(m, std::vector<Rational>(t.cols + 1, Rational(0)));
    t.basis.resize(m);
    int surplus = 0;
    for (int r = 0; r < m; ++r) {
        const auto& con = lp.constraints[r];
        const int sign = con.rhs < 0 ? -1 : 1;
        auto& row = t.rows[r];
        for (int j = 0; j < n; ++j) {
            row[j] = sign * con.coeffs[j];
            if (!lp.nonneg_vars) row[n + j] = -row[j];
        }
        if (con.rel == Relation::ge) {
            row[phys + surplus] = -sign;
            ++surplus;
        }
        row[t.art_start + r] = 1;
        row[t.cols] = sign * con.rhs;
        t.basis[r] = t.art_start + r;
    }

    // phase 1: minimize the sum of artificials
    {
        std::vector<Rational> cost(t.cols, Rational(0));
        for (int c = t.art_start; c < t.cols; ++c) cost[c] = 1;
        t.load_costs(cost);
        t.run(true);
        if (-t.obj[t.cols] != 0) return LpInfeasible{};
        // drive remaining artificials out of the basis; drop redundant rows
        for (int r = t.num_rows() - 1; r >= 0; --r) {
            if (t.basis[r] < t.art_start) continue;
            int ec = -1;
            for (int c = 0; c < t.art_start; ++c)
                if (t.rows[r][c] != 0) { ec = c; break; }
            if (ec >= 0) {
                t.pivot(r, ec);
            } else {
                t.rows.erase(t.rows.begin() + r);
                t.basis.erase(t.basis.begin() + r);
            }
        }
    }

    // phase 2: the real objective on the physical variables
    {
        std::vector<Rational> cost(t.cols, Rational(0));
        for (int j = 0; j < n; ++j) {
            cost[j] = lp.objective[j];
            if (!lp.nonneg_vars) cost[n + j] = -lp.objective[j];
        }
        t.load_costs(cost);
        if (!t.run(false)) return LpUnbounded{};
    }

    std::vector<Rational> phys_val(t.cols, Rational(0));
    for (int r = 0; r < t.num_rows(); ++r) phys_val[t.basis[r]] = t.rows[r][t.cols];
    LpOptimal out;
    out.point.resize(n);
    out.value = 0;
    for (int j = 0; j < n; ++j) {
        out.point[j] = lp.nonneg_vars ? phys_val[j] : phys_val[j] - phys_val[n + j];
        out.value += lp.objective[j] * out.point[j];
    }
    return out;
}

} // namespace coop
