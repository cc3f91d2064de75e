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

#include "u18/residue.hpp"

#include <algorithm>
#include <string>

#include "u18/errors.hpp"

namespace u18 {

namespace {

constexpr int index_of(int unit) {
  for (std::size_t i = 0; i < kUnitsMod18.size(); ++i) {
    if (kUnitsMod18[i] == unit) return static_cast<int>(i);
  }
  return -1;
}

// Row = a, column = e mod 6.
constexpr std::array<std::array<int, 6>, 6> kPowerTable = {{
    {1, 1, 1, 1, 1, 1},
    {1, 5, 7, 17, 13, 11},
    {1, 7, 13, 1, 7, 13},
    {1, 11, 13, 17, 7, 5},
    {1, 13, 7, 1, 13, 7},
    {1, 17, 1, 17, 1, 17},
}};

// Digit root (1..9) -> unit mod 18. Zero marks roots 3, 6, 9 which have no
// class (the number is divisible by 3).
constexpr std::array<int, 10> kClassOfDigitRoot = {0, 1, 11, 0, 13, 5, 0, 7, 17, 0};

}  // namespace

ResidueClass::ResidueClass(int value) : value_(value) {
  if (index_of(value) < 0) {
    throw DomainError(std::to_string(value) + " is not a unit mod 18");
  }
}

Normalization strip_factors(const Natural& m) {
  if (m.is_zero()) throw InputError("cannot normalize zero");
  Normalization norm;
  norm.core = m;
  // Whole zero limbs first; a long run of trailing zero bits is common for
  // constructed inputs.
  while (norm.core.limbs()[0] == 0) {
    norm.core.div_small_assign(1U << 16);
    norm.core.div_small_assign(1U << 16);
    norm.k += 32;
  }
  while (!norm.core.is_odd()) {
    norm.core.div_small_assign(2);
    ++norm.k;
  }
  while (mod_small(norm.core, 3) == 0) {
    norm.core.div_small_assign(3);
    ++norm.l;
  }
  return norm;
}

Natural reassemble(const Normalization& norm) {
  Natural m = norm.core;
  for (unsigned i = 0; i < norm.k; ++i) m.mul_small_assign(2);
  for (unsigned i = 0; i < norm.l; ++i) m.mul_small_assign(3);
  return m;
}

ResidueClass residue_class_of(const Natural& n) {
  if (!n.is_odd()) throw DomainError("residue class requires an odd number");
  const int cls = kClassOfDigitRoot[static_cast<std::size_t>(digit_root(n))];
  if (cls == 0) throw DomainError("residue class requires a number not divisible by 3");
  return ResidueClass(cls);
}

ResidueClass u18_power_table(ResidueClass a, unsigned e) {
  return ResidueClass(kPowerTable[static_cast<std::size_t>(index_of(a.value()))][e % 6]);
}

CandidateSet candidates_for_root(ResidueClass cls, unsigned e) {
  if (e < 2) throw DomainError("root exponent must be at least 2");
  CandidateSet set{e, {}};
  for (int a : kUnitsMod18) {
    if (u18_power_table(ResidueClass(a), e) == cls) set.a_values.push_back(a);
  }
  return set;
}

bool root_feasible(const Normalization& norm, unsigned e) {
  return e != 0 && norm.k % e == 0 && norm.l % e == 0;
}

}  // namespace u18
