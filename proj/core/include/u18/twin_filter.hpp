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

#include <string_view>

#include "u18/natural.hpp"
#include "u18/residue.hpp"

namespace u18 {

// Pairs (q, q+2) coprime to 6 sit in classes [5],[7] (A), [11],[13] (B) or
// [17],[1] (C). Primality is not checked.
enum class TwinType { kA, kB, kC };

std::string_view to_string(TwinType t);

// Throws DomainError unless upper = lower + 2, both coprime to 6, and
// lower's class is 5, 11 or 17.
TwinType twin_type(const Natural& lower, const Natural& upper);

// Products of such pairs are all in [17]; squares are all in [1], [7], [13].
// Membership is necessary, not sufficient, for either.
enum class Discrimination { kSquareCandidate, kTwinProductCandidate, kNeither };

std::string_view to_string(Discrimination d);

struct FilterResult {
  Discrimination kind;
  Normalization norm;
  ResidueClass residue_class;
};

// Classifies the coprime-to-6 core of n. Throws InputError for n = 0.
FilterResult discriminate(const Natural& n);

}  // namespace u18
