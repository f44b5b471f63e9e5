// Copyright 2026 The gqld Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GQLD_VALIDATION_H_
#define GQLD_VALIDATION_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gqld/report.h"

// The property batteries behind `gqld validate`. Every check compares an
// analytic route against an independent numerical one (quadrature, finite
// differences, Monte Carlo, KS) and yields one ValidationReport.
namespace gqld::validation {

enum class Suite { kAll, kSpecial, kDist, kSkew, kThm };

std::optional<Suite> parse_suite(std::string_view name);

/// Runs the suite's batteries. Reports come back sorted by check name;
/// identical (suite, seed) gives identical reports.
std::vector<ValidationReport> run(Suite suite, std::uint64_t seed);

std::vector<ValidationReport> special_battery(std::uint64_t seed);
std::vector<ValidationReport> distribution_battery(std::uint64_t seed);
std::vector<ValidationReport> skew_battery(std::uint64_t seed);
std::vector<ValidationReport> characterize_battery(std::uint64_t seed);

}  // namespace gqld::validation

#endif  // GQLD_VALIDATION_H_
