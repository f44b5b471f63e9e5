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

#include "gqld/grid.h"

#include <cmath>

#include "gqld/error.h"

namespace gqld {

GridSpec::GridSpec(double from, double to, double step) : from_(from), to_(to), step_(step) {
  if (!std::isfinite(from) || !std::isfinite(to) || !(from < to)) {
    throw DomainError("grid: require finite from < to");
  }
  if (!std::isfinite(step) || !(step > 0.0)) throw DomainError("grid: step must be > 0");
  const double intervals = (to - from) / step;
  if (intervals > 1e7) throw DomainError("grid: (to - from) / step exceeds 1e7");
  count_ = static_cast<std::size_t>(std::floor(intervals + 1e-9)) + 1;
}

std::vector<double> GridSpec::points() const {
  std::vector<double> out(count_);
  for (std::size_t i = 0; i < count_; ++i) out[i] = (*this)[i];
  return out;
}

}  // namespace gqld
