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

#include "coop/operad.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <set>

namespace coop {

namespace {

void check_pos(int pos1, int n) {
    if (pos1 < 1 || pos1 > n)
        fail(Errc::index_out_of_range,
             "position " + std::to_string(pos1) + " not in 1.." + std::to_string(n));
}

/// Maps a coalition over A-without-i plus a coalition over B to the
/// composite index. `sa` must not contain the bit at ip.
Coalition splice(Coalition sa, Coalition sb, int ip, int m) {
    const Coalition low = (Coalition{1} << ip) - 1;
    return (sa & low) | (sb << ip) | ((sa >> (ip + 1)) << (ip + m));
}

} // namespace

Coalition coalition_compose(Coalition s, int pos1, Coalition t, int n, int m) {
    check_pos(pos1, n);
    if (n > 0 && s >> n) fail(Errc::index_out_of_range, "coalition outside host set");
    if (t >> m) fail(Errc::index_out_of_range, "coalition outside guest set");
    const int ip = pos1 - 1;
    const Coalition bit = Coalition{1} << ip;
    if (s & bit) return splice(s & ~bit, t, ip, m);
    return splice(s, 0, ip, m);
}

PlayerSet compose_player_sets(const PlayerSet& a, int pos1, const PlayerSet& b) {
    check_pos(pos1, a.size());
    const int ip = pos1 - 1;
    bool collide = false;
    for (const auto& lb : b.labels()) {
        int p = a.position(lb);
        if (p >= 0 && p != ip) { collide = true; break; }
    }
    const std::string prefix = a.label(ip) + ".";
    std::vector<std::string> labels;
    labels.reserve(a.size() + b.size() - 1);
    for (int k = 0; k < ip; ++k) labels.push_back(a.label(k));
    for (const auto& lb : b.labels()) labels.push_back(collide ? prefix + lb : lb);
    for (int k = ip + 1; k < a.size(); ++k) labels.push_back(a.label(k));
    std::set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second) fail(Errc::label_collision, l);
    return PlayerSet(std::move(labels));
}

Game partial_compose(const Game& ga, int pos1, const Game& gb) {
    PlayerSet players = compose_player_sets(ga.players(), pos1, gb.players());
    const int ip = pos1 - 1;
    const int m = gb.num_players();
    const Coalition bit = Coalition{1} << ip;
    const Coalition mask_a = ga.players().full_coalition() & ~bit;
    const Coalition full_b = gb.players().full_coalition();

    // b(B) - b(empty): the unique bilinear rescaling compatible with both the
    // grounded formula and composition with the 0-player unit.
    const Rational scale = gb.grand_value() - gb.value(0);

    std::vector<Rational> values(players.num_coalitions());
    Coalition sa = mask_a;
    while (true) {
        const Rational& alpha = ga.value(sa);
        const Rational marginal = ga.value(sa | bit) - alpha;
        const Rational scaled = scale * alpha;
        for (Coalition sb = 0; sb <= full_b; ++sb)
            values[splice(sa, sb, ip, m)] = scaled + marginal * gb.value(sb);
        if (sa == 0) break;
        sa = (sa - 1) & mask_a;
    }
    bool grounded = values[0] == 0;
    return Game(std::move(players), std::move(values), grounded);
}

Game partial_compose(const Game& ga, std::string_view player, const Game& gb) {
    return partial_compose(ga, ga.players().require_position(player) + 1, gb);
}

Game partial_compose_nongrounded(const Game& ga, int pos1, const Game& gb) {
    return partial_compose(ga, pos1, gb);
}

MobiusGame partial_compose_unanimity(const MobiusGame& ma, int pos1, const MobiusGame& mb) {
    PlayerSet players = compose_player_sets(ma.players(), pos1, mb.players());
    const int ip = pos1 - 1;
    const int m = mb.num_players();
    const Coalition bit = Coalition{1} << ip;
    const Coalition full_a = ma.players().full_coalition();
    const Coalition full_b = mb.players().full_coalition();

    Rational rho_sum = 0;
    for (Coalition t = 1; t <= full_b && full_b != 0; ++t) rho_sum += mb.coeff(t);

    std::vector<Rational> coeffs(players.num_coalitions(), Rational(0));
    for (Coalition s = 0; s <= full_a; ++s) {
        const Rational& lambda = ma.coeff(s);
        if (lambda == 0) continue;
        if (s & bit) {
            const Coalition rest = s & ~bit;
            for (Coalition t = 0; t <= full_b; ++t)
                coeffs[splice(rest, t, ip, m)] += lambda * mb.coeff(t);
        } else {
            coeffs[splice(s, 0, ip, m)] += rho_sum * lambda;
        }
    }
    return MobiusGame(std::move(players), std::move(coeffs));
}

Game total_compose(const Game& g0, const std::vector<Game>& components) {
    if (static_cast<int>(components.size()) != g0.num_players())
        fail(Errc::arity_mismatch, "expected one component per quotient player");
    Game out = g0;
    int pos = 1;
    for (const Game& c : components) {
        out = partial_compose(out, pos, c);
        pos += c.num_players();
    }
    return out;
}

Allocation partial_tensor(const Allocation& x, int pos1, const Allocation& y) {
    check_pos(pos1, x.size());
    PlayerSet players = compose_player_sets(x.players, pos1, y.players);
    const int ip = pos1 - 1;
    const Rational eta = y.total();
    std::vector<Rational> coords;
    coords.reserve(x.size() + y.size() - 1);
    for (int k = 0; k < ip; ++k) coords.push_back(eta * x.coords[k]);
    for (int k = 0; k < y.size(); ++k) coords.push_back(x.coords[ip] * y.coords[k]);
    for (int k = ip + 1; k < x.size(); ++k) coords.push_back(eta * x.coords[k]);
    return Allocation(std::move(players), std::move(coords));
}

Game bargaining() { return unanimity(numbered_players(2), 0b11); }

Game dictator(int k) {
    if (k != 1 && k != 2) fail(Errc::index_out_of_range, "dictator index must be 1 or 2");
    return unanimity(numbered_players(2), Coalition{1} << (k - 1));
}

Game dual_bargaining() {
    std::vector<Rational> values = {Rational(0), Rational(1), Rational(1), Rational(1)};
    return Game(numbered_players(2), std::move(values), true);
}

Game trivial_one() { return unanimity(numbered_players(1), 0b1); }

Game zero_player_unit() { return dirac(PlayerSet(std::vector<std::string>{}), 0, false); }

Game shapley_product(const Game& g1, const Game& g2) {
    Game left = partial_compose(bargaining(), 1, g1);
    return partial_compose(left, g1.num_players() + 1, g2);
}

Game shapley_sum(const Game& g1, const Game& g2) {
    Game left = partial_compose(dual_bargaining(), 1, g1);
    return partial_compose(left, g1.num_players() + 1, g2);
}

namespace {

struct CompoundLayout {
    PlayerSet players;
    std::vector<std::pair<int, int>> blocks; // (first position, size) per component
};

/// Player layout of a total composition, applying the pairwise renaming rule
/// step by step so every composition flavour agrees on labels.
CompoundLayout compound_layout(const Game& g0, const std::vector<Game>& components) {
    if (static_cast<int>(components.size()) != g0.num_players())
        fail(Errc::arity_mismatch, "expected one component per quotient player");
    PlayerSet cur = g0.players();
    CompoundLayout out;
    int pos = 1;
    for (const Game& c : components) {
        cur = compose_player_sets(cur, pos, c.players());
        out.blocks.emplace_back(pos - 1, c.num_players());
        pos += c.num_players();
    }
    out.players = std::move(cur);
    return out;
}

bool simple_values(const Game& g) {
    return std::all_of(g.values().begin(), g.values().end(),
                       [](const Rational& v) { return v == 0 || v == 1; });
}

bool monotone_values(const Game& g) {
    for (int k = 0; k < g.num_players(); ++k) {
        const Coalition bit = Coalition{1} << k;
        for (Coalition s = 0; s < g.values().size(); ++s)
            if (!(s & bit) && g.value(s | bit) < g.value(s)) return false;
    }
    return true;
}

} // namespace

Game simple_compound(const Game& g0, const std::vector<Game>& components) {
    if (!simple_values(g0)) fail(Errc::not_simple, "quotient is not a simple game");
    if (!monotone_values(g0)) fail(Errc::not_monotone, "quotient is not monotone");
    for (const Game& c : components)
        if (!simple_values(c)) fail(Errc::not_simple, "component is not a simple game");

    CompoundLayout layout = compound_layout(g0, components);
    std::vector<Rational> values(layout.players.num_coalitions());
    for (Coalition s = 0; s < values.size(); ++s) {
        Coalition controlled = 0;
        for (std::size_t j = 0; j < components.size(); ++j) {
            auto [first, size] = layout.blocks[j];
            Coalition sj = (s >> first) & ((Coalition{1} << size) - 1);
            if (components[j].value(sj) == 1) controlled |= Coalition{1} << j;
        }
        values[s] = g0.value(controlled);
    }
    bool grounded = values[0] == 0;
    return Game(std::move(layout.players), std::move(values), grounded);
}

Game owen_tensor_composition(const Game& g0, const std::vector<Game>& components) {
    for (const Game& c : components)
        if (c.grand_value() != 1) fail(Errc::not_normalized, "components must be normalized");

    CompoundLayout layout = compound_layout(g0, components);
    const int k = static_cast<int>(components.size());
    std::vector<Rational> values(layout.players.num_coalitions());
    std::vector<Rational> block(k);
    for (Coalition s = 0; s < values.size(); ++s) {
        for (int j = 0; j < k; ++j) {
            auto [first, size] = layout.blocks[j];
            block[j] = components[j].value((s >> first) & ((Coalition{1} << size) - 1));
        }
        Rational total = 0;
        for (Coalition t = 0; t < (Coalition{1} << k); ++t) {
            Rational prod = g0.value(t);
            if (prod == 0) continue;
            for (int j = 0; j < k; ++j)
                prod *= (t & (Coalition{1} << j)) ? block[j] : 1 - block[j];
            total += prod;
        }
        values[s] = total;
    }
    bool grounded = values[0] == 0;
    return Game(std::move(layout.players), std::move(values), grounded);
}

// --- generator expressions ---------------------------------------------

GeneratorExpr GeneratorExpr::leaf(Token token) {
    auto node = std::make_shared<Node>();
    node->leaf = true;
    node->token = token;
    node->arity = token == Token::vempty ? 0 : (token == Token::one ? 1 : 2);
    return GeneratorExpr(std::move(node));
}

GeneratorExpr GeneratorExpr::comp(GeneratorExpr left, int pos1, GeneratorExpr right) {
    if (pos1 < 1 || pos1 > left.arity())
        fail(Errc::arity_mismatch, "composition position " + std::to_string(pos1) +
                                       " not in 1.." + std::to_string(left.arity()));
    auto node = std::make_shared<Node>();
    node->leaf = false;
    node->lhs = left.node_;
    node->rhs = right.node_;
    node->pos1 = pos1;
    node->arity = left.arity() + right.arity() - 1;
    return GeneratorExpr(std::move(node));
}

GeneratorExpr::Token GeneratorExpr::token() const {
    if (!node_->leaf) fail(Errc::internal, "token() on a composition node");
    return node_->token;
}

GeneratorExpr GeneratorExpr::left() const {
    if (node_->leaf) fail(Errc::internal, "left() on a leaf");
    return GeneratorExpr(node_->lhs);
}

GeneratorExpr GeneratorExpr::right() const {
    if (node_->leaf) fail(Errc::internal, "right() on a leaf");
    return GeneratorExpr(node_->rhs);
}

int GeneratorExpr::position() const {
    if (node_->leaf) fail(Errc::internal, "position() on a leaf");
    return node_->pos1;
}

namespace {

Game leaf_game(GeneratorExpr::Token token) {
    using Token = GeneratorExpr::Token;
    switch (token) {
    case Token::bargaining: return bargaining();
    case Token::dictator1: return dictator(1);
    case Token::dictator2: return dictator(2);
    case Token::one: return trivial_one();
    case Token::vempty: return zero_player_unit();
    }
    fail(Errc::internal, "unknown generator token");
}

const char* token_name(GeneratorExpr::Token token) {
    using Token = GeneratorExpr::Token;
    switch (token) {
    case Token::bargaining: return "B";
    case Token::dictator1: return "d1";
    case Token::dictator2: return "d2";
    case Token::one: return "ONE";
    case Token::vempty: return "V_EMPTY";
    }
    return "?";
}

} // namespace

Game GeneratorExpr::evaluate() const {
    if (node_->leaf) return leaf_game(node_->token);
    Game l = left().evaluate();
    Game r = right().evaluate();
    Game composed = partial_compose(l, node_->pos1, r);
    // labels of intermediate results are immaterial, keep them canonical
    return relabel(composed, numbered_players(composed.num_players()));
}

std::string GeneratorExpr::to_sexpr() const {
    if (node_->leaf) return token_name(node_->token);
    return "(comp " + left().to_sexpr() + " " + std::to_string(node_->pos1) + " " +
           right().to_sexpr() + ")";
}

namespace {

struct SexprParser {
    std::string_view text;
    std::size_t at = 0;

    void skip_ws() {
        while (at < text.size() && std::isspace(static_cast<unsigned char>(text[at]))) ++at;
    }

    std::string next_token() {
        skip_ws();
        if (at >= text.size()) fail(Errc::parse_error, "unexpected end of expression");
        char c = text[at];
        if (c == '(' || c == ')') {
            ++at;
            return std::string(1, c);
        }
        std::size_t start = at;
        while (at < text.size() && !std::isspace(static_cast<unsigned char>(text[at])) &&
               text[at] != '(' && text[at] != ')')
            ++at;
        return std::string(text.substr(start, at - start));
    }

    GeneratorExpr parse_expr() {
        std::string tok = next_token();
        if (tok == "(") {
            std::string head = next_token();
            if (head != "comp") fail(Errc::parse_error, "expected 'comp', got '" + head + "'");
            GeneratorExpr l = parse_expr();
            std::string pos = next_token();
            int p = 0;
            try {
                p = std::stoi(pos);
            } catch (...) {
                fail(Errc::parse_error, "expected a position, got '" + pos + "'");
            }
            GeneratorExpr r = parse_expr();
            if (next_token() != ")") fail(Errc::parse_error, "expected ')'");
            return GeneratorExpr::comp(std::move(l), p, std::move(r));
        }
        std::string lower;
        for (char c : tok) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        using Token = GeneratorExpr::Token;
        if (lower == "b") return GeneratorExpr::leaf(Token::bargaining);
        if (lower == "d1") return GeneratorExpr::leaf(Token::dictator1);
        if (lower == "d2") return GeneratorExpr::leaf(Token::dictator2);
        if (lower == "one" || lower == "1") return GeneratorExpr::leaf(Token::one);
        if (lower == "v_empty" || lower == "vempty") return GeneratorExpr::leaf(Token::vempty);
        fail(Errc::parse_error, "unknown generator '" + tok + "'");
    }
};

} // namespace

GeneratorExpr GeneratorExpr::parse_sexpr(std::string_view text) {
    SexprParser parser{text};
    GeneratorExpr e = parser.parse_expr();
    parser.skip_ws();
    if (parser.at != text.size()) fail(Errc::parse_error, "trailing input after expression");
    return e;
}

std::pair<GeneratorExpr, Game> build_unanimity_from_generators(int n, Coalition s) {
    if (n < 1 || n > max_players()) fail(Errc::size_cap, "player count out of range");
    if (s == 0) fail(Errc::empty_support, "unanimity requires a nonempty support");
    if (s >> n) fail(Errc::index_out_of_range, "support outside the player set");

    using Token = GeneratorExpr::Token;
    const int m = 32 - std::countl_zero(s); // highest member, 1-based

    GeneratorExpr expr = GeneratorExpr::leaf(Token::one);
    int extended = 1;
    if (n >= 2) {
        if (m == 1) {
            expr = GeneratorExpr::leaf(Token::dictator1);
        } else {
            expr = GeneratorExpr::leaf((s & 1) ? Token::bargaining : Token::dictator2);
            // invariant: after handling position k, the expression evaluates to
            // u_{(S cap [k]) + veto at k+1} on k+1 players
            for (int k = 2; k < m; ++k)
                expr = GeneratorExpr::comp(
                    expr, k, GeneratorExpr::leaf((s >> (k - 1)) & 1 ? Token::bargaining : Token::dictator2));
        }
        extended = std::max(m, 2);
        for (; extended < n; ++extended)
            expr = GeneratorExpr::comp(expr, m, GeneratorExpr::leaf(Token::dictator1));
    }

    Game value = expr.evaluate();
    if (!(value == unanimity(numbered_players(n), s)))
        fail(Errc::internal, "generator construction did not reproduce the unanimity game");
    return {std::move(expr), std::move(value)};
}

// --- operad axiom checks ------------------------------------------------

namespace {

std::vector<std::vector<int>> permutations_of(int n) {
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> out;
    if (n <= 5) {
        do out.push_back(base);
        while (std::next_permutation(base.begin(), base.end()));
        return out;
    }
    out.push_back(base);                       // identity
    std::swap(base[0], base[1]);               // a transposition
    out.push_back(base);
    std::rotate(base.begin(), base.begin() + 1, base.end()); // a long cycle
    out.push_back(base);
    return out;
}

std::string perm_text(const std::vector<int>& p) {
    std::string out = "(";
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (k) out += ' ';
        out += std::to_string(p[k] + 1);
    }
    return out + ")";
}

bool record_difference(AxiomReport& report, bool& flag, const std::string& axiom,
                       const std::string& detail, const Game& lhs, const Game& rhs) {
    for (Coalition s = 0; s < lhs.values().size(); ++s) {
        if (lhs.value(s) != rhs.value(s)) {
            flag = false;
            report.issues.push_back(
                {axiom, detail, s, to_string(lhs.value(s)), to_string(rhs.value(s))});
            return false;
        }
    }
    return true;
}

} // namespace

AxiomReport check_operad_axioms(const Game& lambda, const Game& mu, const Game& nu,
                                int i, int j, int k) {
    const int p = lambda.num_players();
    const int q = mu.num_players();
    check_pos(i, p);
    check_pos(j, q);
    check_pos(k, p);
    if (i >= k) fail(Errc::index_out_of_range, "parallel axiom requires i < k");

    AxiomReport report;

    // sequential: (l o_i m) o_{i+j-1} n = l o_i (m o_j n)
    {
        Game lhs = partial_compose(partial_compose(lambda, i, mu), i + j - 1, nu);
        Game rhs = partial_compose(lambda, i, partial_compose(mu, j, nu));
        record_difference(report, report.sequential, "sequential",
                          "i=" + std::to_string(i) + " j=" + std::to_string(j), lhs, rhs);
    }

    // parallel: (l o_i m) o_{k+q-1} n = (l o_k n) o_i m
    {
        Game lhs = partial_compose(partial_compose(lambda, i, mu), k + q - 1, nu);
        Game rhs = partial_compose(partial_compose(lambda, k, nu), i, mu);
        record_difference(report, report.parallel, "parallel",
                          "i=" + std::to_string(i) + " k=" + std::to_string(k), lhs, rhs);
    }

    // unit laws on every input of lambda, and on the left
    {
        const Game one = trivial_one();
        for (int pos = 1; pos <= p && report.unit; ++pos) {
            Game lhs = partial_compose(lambda, pos, one);
            record_difference(report, report.unit, "unit",
                              "g o_" + std::to_string(pos) + " 1", lhs, lambda);
        }
        if (report.unit) {
            Game lhs = partial_compose(one, 1, lambda);
            record_difference(report, report.unit, "unit", "1 o_1 g", lhs, lambda);
        }
    }

    // inner equivariance: l o_i (s * m) = s' * (l o_i m)
    {
        Game base = partial_compose(lambda, i, mu);
        for (const auto& sigma : permutations_of(q)) {
            std::vector<int> lifted(p + q - 1);
            std::iota(lifted.begin(), lifted.end(), 0);
            for (int t = 0; t < q; ++t) lifted[i - 1 + t] = i - 1 + sigma[t];
            Game lhs = partial_compose(lambda, i, permute(mu, sigma));
            Game rhs = permute(base, lifted);
            if (!record_difference(report, report.equivariance_inner, "equivariance-inner",
                                   "sigma=" + perm_text(sigma), lhs, rhs))
                break;
        }
    }

    // outer equivariance: (t * l) o_{t(i)} m = t' * (l o_i m)
    {
        Game base = partial_compose(lambda, i, mu);
        for (const auto& tau : permutations_of(p)) {
            const int ti = tau[i - 1];
            std::vector<int> lifted(p + q - 1, -1);
            for (int a = 0; a < p; ++a) {
                if (a == i - 1) continue;
                int source = a < i - 1 ? a : a + q - 1;
                int image = tau[a] < ti ? tau[a] : tau[a] + q - 1;
                lifted[source] = image;
            }
            for (int t = 0; t < q; ++t) lifted[i - 1 + t] = ti + t;
            Game lhs = partial_compose(permute(lambda, tau), ti + 1, mu);
            Game rhs = permute(base, lifted);
            if (!record_difference(report, report.equivariance_outer, "equivariance-outer",
                                   "tau=" + perm_text(tau), lhs, rhs))
                break;
        }
    }

    return report;
}

} // namespace coop
