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

// Square-root certification by base-9 digit expansion.
//
// A square coprime to 6 has the form (a + 18p)^2 with a in {1,5,7,11,13,17}.
// For each candidate a the engine forms N0 = (n - a^2)/36 and then discovers
// p one zeroless base-9 digit per step: digit b_{i+1} is the one that makes
// (N_i - a*b_{i+1}) divisible by 9, and the step compares
//
//   frac_i = (N_i - a*b_{i+1}) / 9     against     f_i = b_{i+1} * (p_{i-1} + p_i)
//
// Equality certifies n = (a + 18 p_i)^2; frac_i < f_i ends the branch with no
// root; otherwise N_{i+1} = frac_i - f_i and the loop continues. The loop
// only adds, subtracts, and multiplies or divides by one-limb constants.

// Precondition: n >= 1 and coprime to 6, a a unit mod 18. Returns a trivial
// result when n == a^2 and a failure when n < a^2 or 36 does not divide
// n - a^2 (no root of the form a + 18p can exist then).
SetupResult square_setup(const Natural& n, int a);

// The unique b in 1..9 with a*b = target (mod 9); 9 stands for residue 0.
int select_digit(int target, int a);

// Advances the state by one digit, appending a trace row.
StepResult square_step(BranchState& state);

// Runs one candidate branch to termination.
BranchTrace run_square_branch(const Natural& n, int a);

// Throws InputError for n = 0.
Certificate sqrt_certify(const Natural& n);

}  // namespace u18
