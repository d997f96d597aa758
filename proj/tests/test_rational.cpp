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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coop/error.hpp"
#include "coop/rational.hpp"

using namespace coop;

TEST_CASE("parses fractions, integers and finite decimals") {
    CHECK(parse_rational("3/4") == make_rational(3, 4));
    CHECK(parse_rational("-3/4") == make_rational(-3, 4));
    CHECK(parse_rational("2/6") == make_rational(1, 3));
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-12") == -12);
    CHECK(parse_rational("+5") == 5);
    CHECK(parse_rational("1.25") == make_rational(5, 4));
    CHECK(parse_rational("-0.5") == make_rational(-1, 2));
    CHECK(parse_rational(".5") == make_rational(1, 2));
    CHECK(parse_rational("2.") == 2);
    CHECK(parse_rational(" 1/2 ") == make_rational(1, 2));
    CHECK(parse_rational("0") == 0);
}

TEST_CASE("rejects malformed input") {
    for (const char* bad : {"", "abc", "1/0", "1/-2", "--3", "1.2.3", "1e5", "/3", "."}) {
        CHECK_THROWS_AS(parse_rational(bad), Error);
    }
    try {
        parse_rational("x");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::unparsable_rational);
    }
}

TEST_CASE("canonical rendering is p or p/q") {
    CHECK(to_string(make_rational(4, 2)) == "2");
    CHECK(to_string(make_rational(-1, 2)) == "-1/2");
    CHECK(to_string(parse_rational("0.125")) == "1/8");
    CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("arithmetic stays exact") {
    Rational third = make_rational(1, 3);
    Rational sum = third + third + third;
    CHECK(sum == 1);
    CHECK(make_rational(1, 10) + make_rational(2, 10) == make_rational(3, 10));
}
