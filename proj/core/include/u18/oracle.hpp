// Copyright 2026 The u18root Authors
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

#include <vector>

#include "u18/natural.hpp"

namespace u18 {

// Reference results computed without the digit-expansion engines.

struct RootResult {
  Natural root;
  bool exact = false;

  friend bool operator==(const RootResult&, const RootResult&) = default;
};

// Largest r with r^e <= n, by bisection between powers of two bracketing
// the root. e >= 1.
RootResult iroot_oracle(const Natural& n, unsigned e);
inline RootResult isqrt_oracle(const Natural& n) { return iroot_oracle(n, 2); }
inline RootResult icbrt_oracle(const Natural& n) { return iroot_oracle(n, 3); }

// Digits b_1, b_2, ... in 1..9 with p = sum 9^i b_{i+1}. Throws DomainError
// for p = 0.
std::vector<int> zeroless_base9(const Natural& p);
Natural from_zeroless_base9(const std::vector<int>& digits);

// Rounded estimate of the terminating step index for a core n:
// log_9(sqrt(n)/2) - 3/2. Zero for n < 361.
unsigned predicted_iterations(const Natural& n);

}  // namespace u18
