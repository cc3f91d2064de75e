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

#include "u18/certificate.hpp"

namespace u18 {

// Cube-root certification. Same loop shape as the square engine with
// N0 = (n - a^3)/54 = a^2 p + 18 a p^2 + 108 p^3 and three candidate a's.
//
// kIncremental carries the remainder from step to step:
//   frac_i = (N_i - a^2 b_{i+1}) / 9
//   f_i    = b_{i+1} * [2a (p_i + p_{i-1}) + 12 (p_i^2 + p_i p_{i-1} + p_{i-1}^2)]
//   N_{i+1} = frac_i - f_i
//
// kDirect re-evaluates from N0 every step:
//   frac_i = (N0 - a^2 p_i) / 9   against   f_i = 2a p_i^2 + 12 p_i^3
// Both modes reach the same decision at every step; the direct values are
// 9^i times the incremental difference.
enum class CubeMode { kIncremental, kDirect };

// Precondition: n >= 1 coprime to 6. Fails when n < a^3 or 54 does not
// divide n - a^3.
SetupResult cube_setup(const Natural& n, int a);

// The unique b in 1..9 with a^2*b = target (mod 9).
int cube_select_digit(int target, int a);

StepResult cube_step(BranchState& state, CubeMode mode = CubeMode::kIncremental);

BranchTrace run_cube_branch(const Natural& n, int a, CubeMode mode = CubeMode::kIncremental);

// Throws InputError for n = 0.
Certificate cbrt_certify(const Natural& n, CubeMode mode = CubeMode::kIncremental);

}  // namespace u18
