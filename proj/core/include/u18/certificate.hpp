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

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "u18/natural.hpp"
#include "u18/residue.hpp"

namespace u18 {

// One line of a branch trace. Row i holds the remainder N_i, the digit
// b_{i+1} chosen to make (N_i - c*b_{i+1}) divisible by 9, the partial
// root parameter p_i and the two comparison quantities.
struct IterationRow {
  unsigned i = 0;
  Natural n_i;
  int dr = 0;      // digit root of n_i
  int b_prev = 0;  // b_i, 0 on the first row
  int b_next = 0;  // b_{i+1}
  Natural p_i;
  // Negative only on a terminating row where N_i < c*b_{i+1}.
  SignedResidual frac_i;
  Natural f_i;

  friend bool operator==(const IterationRow&, const IterationRow&) = default;
};

// Running state of one candidate branch. Owned by a single caller.
struct BranchState {
  int a = 0;
  unsigned exponent = 0;
  unsigned i = 0;
  Natural n0;
  Natural n_i;
  Natural p_prev;
  Natural pow9{1};  // 9^i
  int b_prev = 0;
  std::vector<IterationRow> trace;
};

// Setup outcomes besides a runnable state.
struct SetupTrivial {
  Natural root;  // n == a^e
};
struct SetupFail {
  SignedResidual n_minus_power;  // n - a^e; negative or not divisible by the gate modulus
};
using SetupResult = std::variant<BranchState, SetupTrivial, SetupFail>;

struct StepContinue {};
struct StepEqual {
  Natural root;  // a + 18p
};
struct StepFail {
  SignedResidual residual;  // frac_i - f_i < 0
};
using StepResult = std::variant<StepContinue, StepEqual, StepFail>;

enum class BranchOutcome {
  kTrivial,   // input equals a^e
  kGateFail,  // n < a^e or the modulus gate rejected n - a^e
  kEqual,     // frac_i = f_i
  kFail,      // frac_i < f_i
};

std::string_view to_string(BranchOutcome outcome);

struct BranchTrace {
  int a = 0;
  BranchOutcome outcome = BranchOutcome::kFail;
  std::optional<Natural> n0;
  std::vector<IterationRow> rows;
  // N_{imax+1}: zero on success, negative on failure. For kGateFail this is
  // n - a^e.
  SignedResidual residual;
  std::optional<Natural> core_root;  // a + 18p, on kTrivial/kEqual
  int final_digit = 0;               // b_{imax+1}, shown on the residual row

  bool succeeded() const {
    return outcome == BranchOutcome::kEqual || outcome == BranchOutcome::kTrivial;
  }
  // Index of the terminating step; 0 when the loop never ran.
  unsigned iterations() const { return rows.empty() ? 0 : rows.back().i; }

  friend bool operator==(const BranchTrace&, const BranchTrace&) = default;
};

enum class Verdict { kExactRoot, kNotRoot };

enum class RejectReason {
  kNone,
  kFactorExponents,  // exponent of 2 or 3 not divisible by e
  kResidueClass,     // no a with a^e in the core's class
  kAllBranchesFailed,
};

std::string_view to_string(Verdict verdict);
std::string_view to_string(RejectReason reason);

struct Certificate {
  unsigned exponent = 2;
  Natural input;
  Normalization norm;
  ResidueClass residue_class{1};
  Verdict verdict = Verdict::kNotRoot;
  RejectReason reason = RejectReason::kNone;
  std::optional<Natural> root;  // full root of input, when exact
  std::vector<BranchTrace> branches;

  bool exact() const { return verdict == Verdict::kExactRoot; }
  const BranchTrace* winning_branch() const;
};

// Upper bound on loop steps for a branch over core value n: half the base-9
// digit count of n, rounded up, plus four. Exceeding it is an InternalFault.
unsigned step_budget(const Natural& n);

}  // namespace u18
