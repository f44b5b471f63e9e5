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

#ifndef GQLD_REPORT_H_
#define GQLD_REPORT_H_

#include <cstddef>
#include <limits>
#include <string>
#include <utility>

namespace gqld {

// Outcome of one oracle comparison. `passed` always equals
// `statistic <= threshold`; use make() rather than setting it by hand.
struct ValidationReport {
  std::string check_name;
  double statistic = 0.0;
  double threshold = 0.0;
  bool passed = false;
  std::size_t n = 0;
  // Where the worst deviation occurred, when that is meaningful (grid checks).
  double location = std::numeric_limits<double>::quiet_NaN();
  // Free-form warning, e.g. a skew base outside the symmetric subfamily.
  std::string note;

  static ValidationReport make(std::string name, double statistic, double threshold,
                               std::size_t n) {
    ValidationReport r;
    r.check_name = std::move(name);
    r.statistic = statistic;
    r.threshold = threshold;
    r.passed = statistic <= threshold;
    r.n = n;
    return r;
  }
};

}  // namespace gqld

#endif  // GQLD_REPORT_H_
