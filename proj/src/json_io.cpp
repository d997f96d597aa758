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

#include "coop/json_io.hpp"

namespace coop {

namespace {

std::vector<std::string> labels_from(const json& j) {
    if (!j.contains("players") || !j["players"].is_array())
        fail(Errc::parse_error, "expected a \"players\" array");
    std::vector<std::string> labels;
    for (const auto& p : j["players"]) {
        if (!p.is_string()) fail(Errc::parse_error, "player labels must be strings");
        labels.push_back(p.get<std::string>());
    }
    return labels;
}

std::string value_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    fail(Errc::parse_error, "values must be rational strings");
}

} // namespace

json game_to_json(const Game& g) {
    json values = json::object();
    for (Coalition s = 0; s < g.values().size(); ++s)
        if (g.value(s) != 0) values[g.players().coalition_key(s)] = to_string(g.value(s));
    return json{{"players", g.players().labels()},
                {"grounded", g.is_grounded()},
                {"values", values}};
}

Game game_from_json(const json& j) {
    if (!j.is_object()) fail(Errc::parse_error, "expected a JSON object");
    std::map<std::string, std::string> entries;
    if (j.contains("values")) {
        if (!j["values"].is_object()) fail(Errc::parse_error, "\"values\" must be an object");
        for (const auto& [key, v] : j["values"].items()) entries[key] = value_text(v);
    }
    bool grounded = j.value("grounded", true);
    return new_game(labels_from(j), entries, grounded);
}

std::string game_to_text(const Game& g, int indent) { return game_to_json(g).dump(indent); }

Game game_from_text(std::string_view text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(Errc::parse_error, "invalid JSON");
    return game_from_json(j);
}

json mobius_to_json(const MobiusGame& m) {
    json coeffs = json::object();
    for (Coalition s = 0; s < m.coeffs().size(); ++s)
        if (m.coeff(s) != 0) coeffs[m.players().coalition_key(s)] = to_string(m.coeff(s));
    return json{{"players", m.players().labels()},
                {"basis", "unanimity"},
                {"coeffs", coeffs}};
}

MobiusGame mobius_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_object())
        fail(Errc::parse_error, "expected a \"coeffs\" object");
    PlayerSet players(labels_from(j));
    std::vector<Rational> coeffs(players.num_coalitions(), Rational(0));
    for (const auto& [key, v] : j["coeffs"].items())
        coeffs[players.coalition_from_key(key)] = parse_rational(value_text(v));
    return MobiusGame(std::move(players), std::move(coeffs));
}

bool looks_like_mobius(const json& j) { return j.is_object() && j.contains("coeffs"); }

json allocation_to_json(const Allocation& x) {
    json out = json::object();
    for (int k = 0; k < x.size(); ++k) out[x.players.label(k)] = to_string(x.coords[k]);
    return out;
}

json imputation_simplex_to_json(const ImputationSimplex& s) {
    json vertices = json::array();
    for (const auto& v : s.vertices) vertices.push_back(allocation_to_json(v));
    return json{{"players", s.players.labels()}, {"empty", s.empty}, {"vertices", vertices}};
}

json core_description_to_json(const CoreDescription& c) {
    json out{{"players", c.players.labels()}, {"empty", c.empty}};
    out["lp_value"] = to_string(c.lp_value);
    if (c.vertices) {
        json vertices = json::array();
        for (const auto& v : *c.vertices) vertices.push_back(allocation_to_json(v));
        out["vertices"] = vertices;
    }
    if (c.point) out["point"] = allocation_to_json(*c.point);
    if (!c.collection.empty()) {
        json coll = json::array();
        for (const auto& [s, w] : c.collection)
            coll.push_back({{"coalition", c.players.coalition_key(s)}, {"weight", to_string(w)}});
        out["violating_collection"] = coll;
    }
    return out;
}

json witness_to_json(const Witness& w, const PlayerSet& players) {
    json out{{"kind", w.kind}, {"note", w.note}};
    json coalitions = json::array();
    for (Coalition s : w.coalitions) coalitions.push_back(players.coalition_key(s));
    if (!w.coalitions.empty()) out["coalitions"] = coalitions;
    json values = json::array();
    for (const auto& v : w.values) values.push_back(to_string(v));
    if (!w.values.empty()) out["values"] = values;
    if (!w.collection.empty()) {
        json coll = json::array();
        for (const auto& [s, y] : w.collection)
            coll.push_back({{"coalition", players.coalition_key(s)}, {"weight", to_string(y)}});
        out["collection"] = coll;
    }
    return out;
}

json class_report_to_json(const ClassReport& r, const PlayerSet& players) {
    json out{{"grounded", r.grounded},     {"normalized", r.normalized},
             {"nonnegative", r.nonnegative}, {"monotone", r.monotone},
             {"simple", r.simple},         {"additive", r.additive},
             {"capacity", r.capacity},     {"convex", r.convex},
             {"totally_monotone", r.totally_monotone},
             {"totally_alternating", r.totally_alternating}};
    json km = json::object(), ka = json::object();
    for (const auto& [k, v] : r.k_monotone) km[std::to_string(k)] = v;
    for (const auto& [k, v] : r.k_alternating) ka[std::to_string(k)] = v;
    out["k_monotone"] = km;
    out["k_alternating"] = ka;
    if (r.balanced)
        out["balanced"] = *r.balanced;
    else
        out["balanced"] = "skipped: past LP size cap";
    json witnesses = json::object();
    for (const auto& [name, w] : r.witnesses) witnesses[name] = witness_to_json(w, players);
    if (!witnesses.empty()) out["witnesses"] = witnesses;
    return out;
}

} // namespace coop
