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

#ifndef GQLD_ERROR_H_
#define GQLD_ERROR_H_

#include <stdexcept>
#include <string>

namespace gqld {

// Argument outside the mathematical domain of an operation, or a parameter
// set that violates a family invariant.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Result not representable in double precision (overflow, or a tail
// probability that underflowed).
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

// An iterative method hit its iteration or panel cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gqld

#endif  // GQLD_ERROR_H_
