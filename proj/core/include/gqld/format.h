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

#ifndef GQLD_FORMAT_H_
#define GQLD_FORMAT_H_

#include <string>

namespace gqld {

/// Locale-independent rendering with 17 significant digits ("%.17g").
std::string format_double(double v);

/// Shortest string that round-trips to `v`. Used for labels.
std::string format_shortest(double v);

}  // namespace gqld

#endif  // GQLD_FORMAT_H_
