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

#include <array>
#include <compare>
#include <vector>

#include "u18/natural.hpp"

namespace u18 {

// An element of the reduced residue system mod 18: {1, 5, 7, 11, 13, 17}.
// Every integer coprime to 6 falls in exactly one of these classes.
class ResidueClass {
 public:
  // Throws DomainError unless value is one of the six units mod 18.
  explicit ResidueClass(int value);

  int value() const { return value_; }

  friend auto operator<=>(const ResidueClass&, const ResidueClass&) = default;

 private:
  int value_;
};

inline constexpr std::array<int, 6> kUnitsMod18 = {1, 5, 7, 11, 13, 17};

// M = 2^k * 3^l * core, with core coprime to 6.
struct Normalization {
  unsigned k = 0;
  unsigned l = 0;
  Natural core;
};

// a-values whose e-th power lands in a given class, ascending.
struct CandidateSet {
  unsigned exponent = 0;
  std::vector<int> a_values;

  bool empty() const { return a_values.empty(); }
};

// Throws InputError for m = 0.
Normalization strip_factors(const Natural& m);
Natural reassemble(const Normalization& norm);

// Class of n mod 18 via the digit root: the unique unit c with
// c = digit_root(n) (mod 9). Throws DomainError if n is even or divisible by 3.
ResidueClass residue_class_of(const Natural& n);

// Class of a^e mod 18, read from the 6x6 power table (period 6 in e).
ResidueClass u18_power_table(ResidueClass a, unsigned e);

// Throws DomainError for e < 2.
CandidateSet candidates_for_root(ResidueClass cls, unsigned e);

// Whether 2^k * 3^l can be a perfect e-th power.
bool root_feasible(const Normalization& norm, unsigned e);

}  // namespace u18
