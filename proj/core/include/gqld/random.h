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

#ifndef GQLD_RANDOM_H_
#define GQLD_RANDOM_H_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace gqld {

// One generator per sampling task; never share an Rng across threads.
using Rng = std::mt19937_64;

/// Uniform draw on the open interval (0, 1) from the top 53 bits.
inline double open_uniform(Rng& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

enum class SampleSource { kInverseCdf, kExponentialTransform, kStudentTransform, kSkewRejection };

std::string_view to_string(SampleSource source);

// Seeded draws tagged with the transform that produced them. Identical
// (seed, source, params) always give identical values.
struct SampleBatch {
  std::vector<double> values;
  std::uint64_t seed = 0;
  SampleSource source = SampleSource::kInverseCdf;
  std::string params_fingerprint;
};

}  // namespace gqld

#endif  // GQLD_RANDOM_H_
