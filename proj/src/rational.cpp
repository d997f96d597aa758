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

#include "coop/rational.hpp"

#include <algorithm>
#include <cctype>

#include "coop/error.hpp"

namespace coop {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
    });
}

} // namespace

Rational make_rational(long num, long den) {
    if (den == 0) fail(Errc::unparsable_rational, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) fail(Errc::unparsable_rational, "empty string");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
        if (s.empty()) fail(Errc::unparsable_rational, std::string(text));
    }

    auto bad = [&]() -> Rational { fail(Errc::unparsable_rational, std::string(text)); };

    Rational r;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return bad();
        mpz_class n(std::string(num), 10), d(std::string(den), 10);
        if (d == 0) return bad();
        r = Rational(n, d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty()) return bad();
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) return bad();
        mpz_class n = whole.empty() ? mpz_class(0) : mpz_class(std::string(whole), 10);
        mpz_class d(1);
        for (char c : frac) {
            n = n * 10 + (c - '0');
            d *= 10;
        }
        r = Rational(n, d);
    } else {
        if (!all_digits(s)) return bad();
        r = Rational(mpz_class(std::string(s), 10));
    }
    r.canonicalize();
    if (negative) r = -r;
    return r;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

} // namespace coop
