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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace coop {

/// Exact rational value. Always kept canonical: lowest terms, positive
/// denominator. All arithmetic in the library is exact.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Accepts "p/q", plain integers and finite decimals ("-1.25" -> -5/4).
Rational parse_rational(std::string_view text);

/// Canonical rendering: "p" for integers, "p/q" otherwise. Never decimal.
std::string to_string(const Rational& value);

} // namespace coop
