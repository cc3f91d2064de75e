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

// Pieces shared by the square and cube engines. Not installed.

#pragma once

#include <functional>

#include "u18/certificate.hpp"

namespace u18::detail {

// n - a^e over gate_modulus (36 for squares, 54 for cubes).
SetupResult setup_branch(const Natural& n, int a, unsigned exponent, std::uint32_t gate_modulus);

// Digit b in 1..9 with coeff*b = target (mod 9), coeff coprime to 3.
int digit_for(int target, int coeff);

using StepFn = std::function<StepResult(BranchState&)>;
using SetupFn = std::function<SetupResult(const Natural&, int)>;

BranchTrace run_branch(const Natural& n, int a, const SetupFn& setup, const StepFn& step);

using BranchFn = std::function<BranchTrace(const Natural&, int)>;

Certificate certify(const Natural& n, unsigned exponent, const BranchFn& run);

// a + 18p
Natural root_from(int a, const Natural& p);

}  // namespace u18::detail
