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

#include "u18/sqrt_engine.hpp"

#include "branch_driver.hpp"
#include "u18/errors.hpp"

namespace u18 {

SetupResult square_setup(const Natural& n, int a) {
  return detail::setup_branch(n, a, 2, 36);
}

int select_digit(int target, int a) { return detail::digit_for(target, a); }

StepResult square_step(BranchState& s) {
  const int b = select_digit(static_cast<int>(mod_small(s.n_i, 9)), s.a);
  const auto ab = static_cast<std::uint32_t>(s.a * b);

  // p_i = p_{i-1} + 9^i b
  Natural p_i = mul_small(s.pow9, static_cast<std::uint32_t>(b));
  p_i += s.p_prev;
  // f_i = b (p_{i-1} + p_i)
  Natural f_i = add(s.p_prev, p_i);
  f_i.mul_small_assign(static_cast<std::uint32_t>(b));

  IterationRow row;
  row.i = s.i;
  row.n_i = s.n_i;
  row.dr = digit_root(s.n_i);
  row.b_prev = s.b_prev;
  row.b_next = b;
  row.p_i = p_i;
  row.f_i = f_i;

  if (s.n_i < Natural(ab)) {
    // frac_i would be negative; f_i > 0 so this can only terminate.
    Natural frac_mag(ab);
    frac_mag -= s.n_i;
    if (frac_mag.div_small_assign(9) != 0) throw InternalFault("frac_i is not integral");
    row.frac_i = SignedResidual::negative(frac_mag);
    s.trace.push_back(std::move(row));
    return StepFail{SignedResidual::negative(add(frac_mag, f_i))};
  }

  Natural frac = s.n_i;
  frac -= ab;
  if (frac.div_small_assign(9) != 0) throw InternalFault("frac_i is not integral");
  row.frac_i = SignedResidual::positive(frac);
  s.trace.push_back(std::move(row));

  const auto order = frac <=> f_i;
  if (order == 0) return StepEqual{detail::root_from(s.a, p_i)};
  if (order < 0) return StepFail{SignedResidual::difference(frac, f_i)};

  frac -= f_i;
  s.n_i = std::move(frac);
  s.p_prev = std::move(p_i);
  s.pow9.mul_small_assign(9);
  s.b_prev = b;
  ++s.i;
  return StepContinue{};
}

BranchTrace run_square_branch(const Natural& n, int a) {
  return detail::run_branch(n, a, square_setup, square_step);
}

Certificate sqrt_certify(const Natural& n) {
  return detail::certify(n, 2, run_square_branch);
}

}  // namespace u18
