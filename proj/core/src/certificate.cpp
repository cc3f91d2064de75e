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

#include "u18/certificate.hpp"

#include <string>

#include "branch_driver.hpp"
#include "u18/errors.hpp"

namespace u18 {

std::string_view to_string(BranchOutcome outcome) {
  switch (outcome) {
    case BranchOutcome::kTrivial: return "trivial";
    case BranchOutcome::kGateFail: return "gate-fail";
    case BranchOutcome::kEqual: return "equal";
    case BranchOutcome::kFail: return "fail";
  }
  return "?";
}

std::string_view to_string(Verdict verdict) {
  return verdict == Verdict::kExactRoot ? "exact" : "not-root";
}

std::string_view to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::kNone: return "none";
    case RejectReason::kFactorExponents: return "factor-exponents";
    case RejectReason::kResidueClass: return "residue-class";
    case RejectReason::kAllBranchesFailed: return "all-branches-failed";
  }
  return "?";
}

const BranchTrace* Certificate::winning_branch() const {
  for (const auto& b : branches) {
    if (b.succeeded()) return &b;
  }
  return nullptr;
}

unsigned step_budget(const Natural& n) {
  constexpr std::uint32_t kNinePow10 = 3486784401U;
  unsigned digits = 0;
  Natural rest = n;
  while (rest >= Natural(kNinePow10)) {
    rest.div_small_assign(kNinePow10);
    digits += 10;
  }
  while (!rest.is_zero()) {
    rest.div_small_assign(9);
    ++digits;
  }
  return (digits + 1) / 2 + 4;
}

namespace detail {

SetupResult setup_branch(const Natural& n, int a, unsigned exponent, std::uint32_t gate_modulus) {
  const Natural power = pow(Natural(static_cast<std::uint64_t>(a)), exponent);
  auto diff = sub_checked(n, power);
  if (!diff) return SetupFail{SignedResidual::difference(n, power)};
  if (diff->is_zero()) return SetupTrivial{Natural(static_cast<std::uint64_t>(a))};
  auto [n0, rem] = div_small(*diff, gate_modulus);
  if (rem != 0) return SetupFail{SignedResidual::positive(std::move(*diff))};
  BranchState state;
  state.a = a;
  state.exponent = exponent;
  state.n0 = n0;
  state.n_i = std::move(n0);
  return state;
}

int digit_for(int target, int coeff) {
  int found = 0;
  for (int b = 1; b <= 9; ++b) {
    if ((coeff * b) % 9 == target % 9) {
      if (found != 0) throw InternalFault("digit selection is not unique");
      found = b;
    }
  }
  if (found == 0) throw InternalFault("no digit satisfies the divisibility condition");
  return found;
}

Natural root_from(int a, const Natural& p) {
  Natural r = mul_small(p, 18);
  r += static_cast<std::uint32_t>(a);
  return r;
}

BranchTrace run_branch(const Natural& n, int a, const SetupFn& setup, const StepFn& step) {
  BranchTrace trace;
  trace.a = a;
  SetupResult s = setup(n, a);
  if (auto* trivial = std::get_if<SetupTrivial>(&s)) {
    trace.outcome = BranchOutcome::kTrivial;
    trace.n0 = Natural{};
    trace.core_root = trivial->root;
    return trace;
  }
  if (auto* fail = std::get_if<SetupFail>(&s)) {
    trace.outcome = BranchOutcome::kGateFail;
    trace.residual = fail->n_minus_power;
    return trace;
  }
  BranchState& state = std::get<BranchState>(s);
  trace.n0 = state.n0;
  const unsigned budget = step_budget(n);
  for (unsigned steps = 0;; ++steps) {
    if (steps >= budget) {
      throw InternalFault("step budget exhausted for n=" + n.to_decimal() +
                          " a=" + std::to_string(a));
    }
    StepResult r = step(state);
    if (std::holds_alternative<StepContinue>(r)) continue;
    trace.final_digit = state.trace.back().b_next;
    trace.rows = std::move(state.trace);
    if (auto* eq = std::get_if<StepEqual>(&r)) {
      trace.outcome = BranchOutcome::kEqual;
      trace.core_root = std::move(eq->root);
    } else {
      trace.outcome = BranchOutcome::kFail;
      trace.residual = std::get<StepFail>(r).residual;
    }
    return trace;
  }
}

Certificate certify(const Natural& n, unsigned exponent, const BranchFn& run) {
  if (n.is_zero()) throw InputError("input must be a positive integer");
  Certificate cert;
  cert.exponent = exponent;
  cert.input = n;
  cert.norm = strip_factors(n);
  cert.residue_class = residue_class_of(cert.norm.core);
  if (!root_feasible(cert.norm, exponent)) {
    cert.reason = RejectReason::kFactorExponents;
    return cert;
  }
  const CandidateSet candidates = candidates_for_root(cert.residue_class, exponent);
  if (candidates.empty()) {
    cert.reason = RejectReason::kResidueClass;
    return cert;
  }
  const BranchTrace* winner = nullptr;
  for (int a : candidates.a_values) {
    cert.branches.push_back(run(cert.norm.core, a));
  }
  for (const auto& b : cert.branches) {
    if (!b.succeeded()) continue;
    if (winner != nullptr) throw InternalFault("two branches certified a root");
    if (pow(*b.core_root, exponent) != cert.norm.core) {
      throw InternalFault("certified root does not reproduce the core");
    }
    winner = &b;
  }
  if (winner == nullptr) {
    cert.reason = RejectReason::kAllBranchesFailed;
    return cert;
  }
  Natural root = *winner->core_root;
  for (unsigned i = 0; i < cert.norm.k / exponent; ++i) root.mul_small_assign(2);
  for (unsigned i = 0; i < cert.norm.l / exponent; ++i) root.mul_small_assign(3);
  if (pow(root, exponent) != n) throw InternalFault("reassembled root does not reproduce input");
  cert.verdict = Verdict::kExactRoot;
  cert.root = std::move(root);
  return cert;
}

}  // namespace detail
}  // namespace u18
