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

#include "coop.h"

#include <cstring>
#include <new>
#include <string>

#include "coop/json_io.hpp"
#include "coop/multilinear.hpp"
#include "coop/operad.hpp"
#include "coop/verify.hpp"

struct coop_game {
    coop::Game game;
};

namespace {

thread_local std::string g_last_error;

int status_of(coop::Errc code) {
    using coop::Errc;
    switch (code) {
    case Errc::parse_error: return COOP_ERR_PARSE;
    case Errc::duplicate_label: return COOP_ERR_DUPLICATE_LABEL;
    case Errc::unknown_player: return COOP_ERR_UNKNOWN_PLAYER;
    case Errc::unknown_player_in_coalition: return COOP_ERR_UNKNOWN_PLAYER_IN_COALITION;
    case Errc::nonzero_empty_set_when_grounded: return COOP_ERR_NONZERO_EMPTY_SET_WHEN_GROUNDED;
    case Errc::unparsable_rational: return COOP_ERR_UNPARSABLE_RATIONAL;
    case Errc::empty_support: return COOP_ERR_EMPTY_SUPPORT;
    case Errc::empty_support_for_grounded_game: return COOP_ERR_EMPTY_SUPPORT_FOR_GROUNDED_GAME;
    case Errc::negative_weight: return COOP_ERR_NEGATIVE_WEIGHT;
    case Errc::empty_derivative_set: return COOP_ERR_EMPTY_DERIVATIVE_SET;
    case Errc::not_a_permutation: return COOP_ERR_NOT_A_PERMUTATION;
    case Errc::index_out_of_range: return COOP_ERR_INDEX_OUT_OF_RANGE;
    case Errc::label_collision: return COOP_ERR_LABEL_COLLISION;
    case Errc::arity_mismatch: return COOP_ERR_ARITY_MISMATCH;
    case Errc::not_simple: return COOP_ERR_NOT_SIMPLE;
    case Errc::not_monotone: return COOP_ERR_NOT_MONOTONE;
    case Errc::not_normalized: return COOP_ERR_NOT_NORMALIZED;
    case Errc::bad_k: return COOP_ERR_BAD_K;
    case Errc::size_cap: return COOP_ERR_SIZE_CAP;
    case Errc::negative_game: return COOP_ERR_NEGATIVE_GAME;
    case Errc::not_convex: return COOP_ERR_NOT_CONVEX;
    case Errc::dimension_mismatch: return COOP_ERR_DIMENSION_MISMATCH;
    case Errc::variable_collision: return COOP_ERR_VARIABLE_COLLISION;
    case Errc::malformed_program: return COOP_ERR_MALFORMED_PROGRAM;
    case Errc::internal: return COOP_ERR_INTERNAL;
    }
    return COOP_ERR_INTERNAL;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return COOP_OK;
    } catch (const coop::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return COOP_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return COOP_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int require(bool ok, const char* message) {
    if (!ok) {
        g_last_error = message;
        return COOP_ERR_PARSE;
    }
    return COOP_OK;
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma - start);
        while (!piece.empty() && piece.front() == ' ') piece.erase(piece.begin());
        while (!piece.empty() && piece.back() == ' ') piece.pop_back();
        out.push_back(piece);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace

extern "C" {

int coop_api_version(void) { return COOP_API_VERSION; }

const char* coop_last_error(void) { return g_last_error.c_str(); }

void coop_string_free(char* s) { delete[] s; }

void coop_game_free(coop_game* g) { delete g; }

int coop_game_parse(const char* json_text, coop_game** out) {
    if (int rc = require(json_text && out, "null argument")) return rc;
    return guarded([&] { *out = new coop_game{coop::game_from_text(json_text)}; });
}

int coop_game_to_json(const coop_game* g, char** json_out) {
    if (int rc = require(g && json_out, "null argument")) return rc;
    return guarded([&] { *json_out = dup_string(coop::game_to_text(g->game)); });
}

int coop_game_player_count(const coop_game* g, int* out) {
    if (int rc = require(g && out, "null argument")) return rc;
    *out = g->game.num_players();
    return COOP_OK;
}

int coop_game_unanimity(const char* labels_csv, const char* coalition_csv, coop_game** out) {
    if (int rc = require(labels_csv && coalition_csv && out, "null argument")) return rc;
    return guarded([&] {
        coop::PlayerSet players(split_csv(labels_csv));
        coop::Coalition s = players.coalition_from_key(coalition_csv);
        *out = new coop_game{coop::unanimity(players, s)};
    });
}

int coop_game_dirac(const char* labels_csv, const char* coalition_csv, int grounded,
                    coop_game** out) {
    if (int rc = require(labels_csv && coalition_csv && out, "null argument")) return rc;
    return guarded([&] {
        coop::PlayerSet players(split_csv(labels_csv));
        coop::Coalition s = players.coalition_from_key(coalition_csv);
        *out = new coop_game{coop::dirac(players, s, grounded != 0)};
    });
}

int coop_game_weighted_majority(const char* weights_csv, const char* quota, coop_game** out) {
    if (int rc = require(weights_csv && quota && out, "null argument")) return rc;
    return guarded([&] {
        std::vector<coop::Rational> weights;
        for (const auto& w : split_csv(weights_csv)) weights.push_back(coop::parse_rational(w));
        *out = new coop_game{coop::weighted_majority(weights, coop::parse_rational(quota))};
    });
}

int coop_compose_at(const coop_game* host, const char* player, const coop_game* guest,
                    coop_game** out) {
    if (int rc = require(host && player && guest && out, "null argument")) return rc;
    return guarded([&] {
        *out = new coop_game{coop::partial_compose(host->game, player, guest->game)};
    });
}

int coop_compose_total(const coop_game* quotient, const coop_game* const* components,
                       size_t count, coop_game** out) {
    if (int rc = require(quotient && out && (components || count == 0), "null argument")) return rc;
    return guarded([&] {
        std::vector<coop::Game> comps;
        comps.reserve(count);
        for (size_t k = 0; k < count; ++k) {
            if (!components[k]) coop::fail(coop::Errc::parse_error, "null component");
            comps.push_back(components[k]->game);
        }
        *out = new coop_game{coop::total_compose(quotient->game, comps)};
    });
}

int coop_transform_json(const char* input_json, const char* kind, const char* player,
                        char** output_json) {
    if (int rc = require(input_json && kind && output_json, "null argument")) return rc;
    return guarded([&] {
        const std::string op = kind;
        coop::json j = coop::json::parse(std::string(input_json), nullptr, false);
        if (j.is_discarded()) coop::fail(coop::Errc::parse_error, "invalid JSON");
        coop::json out;
        if (op == "mobius") {
            out = coop::mobius_to_json(coop::mobius(coop::game_from_json(j)));
        } else if (op == "zeta") {
            coop::MobiusGame m = coop::looks_like_mobius(j)
                                     ? coop::mobius_from_json(j)
                                     : coop::mobius(coop::game_from_json(j));
            out = coop::game_to_json(coop::zeta(m));
        } else if (op == "dual") {
            out = coop::game_to_json(coop::dual(coop::game_from_json(j)));
        } else if (op == "derivative") {
            if (!player) coop::fail(coop::Errc::unknown_player, "derivative needs a player");
            out = coop::game_to_json(
                coop::derivative_player(coop::game_from_json(j), std::string_view(player)));
        } else {
            coop::fail(coop::Errc::parse_error, "unknown transform: " + op);
        }
        *output_json = dup_string(out.dump(2));
    });
}

int coop_analyze(const coop_game* g, int kmax, char** json_out) {
    if (int rc = require(g && json_out, "null argument")) return rc;
    return guarded([&] {
        coop::ClassReport report = coop::analyze(g->game, kmax > 0 ? kmax : 4);
        *json_out = dup_string(coop::class_report_to_json(report, g->game.players()).dump(2));
    });
}

int coop_solve(const coop_game* g, const char* solution, char** json_out) {
    if (int rc = require(g && solution && json_out, "null argument")) return rc;
    return guarded([&] {
        const std::string what = solution;
        coop::json out;
        if (what == "shapley") {
            out = coop::json{{"concept", "shapley"},
                             {"value", coop::allocation_to_json(coop::shapley(g->game))}};
        } else if (what == "banzhaf") {
            out = coop::json{
                {"concept", "banzhaf"},
                {"value", coop::allocation_to_json(coop::banzhaf(g->game))},
                {"unanimity_scaled",
                 coop::allocation_to_json(coop::banzhaf_unanimity_scaled(g->game))}};
        } else if (what == "core") {
            coop::CoreDescription core =
                coop::is_nonnegative(g->game) && coop::is_convex(g->game) &&
                        g->game.num_players() <= 8
                    ? coop::core_vertices_convex(g->game)
                    : coop::core_description(g->game);
            out = coop::core_description_to_json(core);
            out["concept"] = "core";
        } else if (what == "imputations") {
            out = coop::imputation_simplex_to_json(coop::imputation_vertices(g->game));
            out["concept"] = "imputations";
        } else {
            coop::fail(coop::Errc::parse_error, "unknown concept: " + what);
        }
        *json_out = dup_string(out.dump(2));
    });
}

int coop_decompose(int n, const char* coalition_csv, char** sexpr_out, coop_game** game_out) {
    if (int rc = require(coalition_csv && sexpr_out, "null argument")) return rc;
    return guarded([&] {
        coop::PlayerSet players = coop::numbered_players(n);
        coop::Coalition s = players.coalition_from_key(coalition_csv);
        auto [expr, game] = coop::build_unanimity_from_generators(n, s);
        *sexpr_out = dup_string(expr.to_sexpr());
        if (game_out) *game_out = new coop_game{std::move(game)};
    });
}

int coop_verify(const char* suite, int trials, uint64_t seed, const char* klass, int k,
                char** report_json, int* hard_pass) {
    if (int rc = require(suite && report_json && hard_pass, "null argument")) return rc;
    return guarded([&] {
        coop::VerifyOptions opts;
        opts.trials = trials > 0 ? trials : 100;
        opts.seed = seed;
        if (klass) opts.klass = klass;
        if (k > 0) opts.k = k;
        coop::VerifyResult res = coop::run_verify(suite, opts);
        *report_json = dup_string(res.report.dump(2));
        *hard_pass = res.hard_pass ? 1 : 0;
    });
}

} // extern "C"
