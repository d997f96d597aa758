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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace coop {

struct VerifyOptions {
    int trials = 100;
    std::uint64_t seed = 1;
    std::string klass; // closure suite: restrict to one class
    int k = 3;         // order for the k-indexed classes
};

struct VerifyResult {
    std::string suite;
    bool hard_pass = true;  // false only when a hard invariant failed
    bool report_only = false;
    int checks = 0;
    int failures = 0;
    nlohmann::json report;
};

/// Seeded randomized identity suites. Deterministic under a fixed seed;
/// every failing instance is recorded as a replayable JSON fixture.
/// "banzhaf-composite" is report-only and never fails the run.
VerifyResult run_verify(std::string_view suite, const VerifyOptions& opts);

std::vector<std::string> verify_suites();

} // namespace coop
