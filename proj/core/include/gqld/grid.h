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

#ifndef GQLD_GRID_H_
#define GQLD_GRID_H_

#include <cstddef>
#include <vector>

namespace gqld {

// Equally spaced evaluation points from..to (inclusive of `to` when it
// falls on the lattice).
class GridSpec {
 public:
  /// Requires from < to, step > 0 and (to - from) / step <= 1e7.
  GridSpec(double from, double to, double step);

  double from() const { return from_; }
  double to() const { return to_; }
  double step() const { return step_; }
  std::size_t size() const { return count_; }
  double operator[](std::size_t i) const { return from_ + step_ * static_cast<double>(i); }
  std::vector<double> points() const;

 private:
  double from_;
  double to_;
  double step_;
  std::size_t count_;
};

}  // namespace gqld

#endif  // GQLD_GRID_H_
