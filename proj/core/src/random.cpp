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

#include "gqld/random.h"

namespace gqld {

std::string_view to_string(SampleSource source) {
  switch (source) {
    case SampleSource::kInverseCdf:
      return "inverse";
    case SampleSource::kExponentialTransform:
      return "thm1";
    case SampleSource::kStudentTransform:
      return "thm2";
    case SampleSource::kSkewRejection:
      return "skew";
  }
  return "unknown";
}

}  // namespace gqld
