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

#include "u18/twin_filter.hpp"

#include "u18/errors.hpp"

namespace u18 {

std::string_view to_string(TwinType t) {
  switch (t) {
    case TwinType::kA: return "A";
    case TwinType::kB: return "B";
    case TwinType::kC: return "C";
  }
  return "?";
}

std::string_view to_string(Discrimination d) {
  switch (d) {
    case Discrimination::kSquareCandidate: return "SquareCandidate";
    case Discrimination::kTwinProductCandidate: return "TwinProductCandidate";
    case Discrimination::kNeither: return "Neither";
  }
  return "?";
}

TwinType twin_type(const Natural& lower, const Natural& upper) {
  if (add(lower, Natural(2)) != upper) throw DomainError("twin pair must differ by exactly 2");
  const ResidueClass lo = residue_class_of(lower);
  residue_class_of(upper);  // throws if upper is not coprime to 6
  switch (lo.value()) {
    case 5: return TwinType::kA;
    case 11: return TwinType::kB;
    case 17: return TwinType::kC;
    default:
      throw DomainError("no coprime-to-6 pair (q, q+2) starts in class " +
                        std::to_string(lo.value()));
  }
}

FilterResult discriminate(const Natural& n) {
  Normalization norm = strip_factors(n);
  const ResidueClass cls = residue_class_of(norm.core);
  Discrimination kind = Discrimination::kNeither;
  switch (cls.value()) {
    case 1:
    case 7:
    case 13: kind = Discrimination::kSquareCandidate; break;
    case 17: kind = Discrimination::kTwinProductCandidate; break;
    default: break;
  }
  return {kind, std::move(norm), cls};
}

}  // namespace u18
