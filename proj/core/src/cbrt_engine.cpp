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

#include "u18/cbrt_engine.hpp"

#include "branch_driver.hpp"
#include "u18/errors.hpp"

namespace u18 {

namespace {

// Expanding N0 = a^2 p + 18 a p^2 + 108 p^3 across p_i = p' + 9^i b and
// dividing by 9^{i+1} gives
//   f_i = b [2a (p_i + p') + 12 (p_i^2 + p_i p' + p'^2)].
Natural incremental_f(int a, int b, const Natural& p_i, const Natural& p_prev) {
  Natural linear = add(p_i, p_prev);
  linear.mul_small_assign(static_cast<std::uint32_t>(2 * a));
  Natural quad = mul(p_i, p_i);
  quad += mul(p_i, p_prev);
  quad += mul(p_prev, p_prev);
  quad.mul_small_assign(12);
  linear += quad;
  linear.mul_small_assign(static_cast<std::uint32_t>(b));
  return linear;
}

// a^2 p + 18 a p^2 + 108 p^3
Natural cubic_part(int a, const Natural& p) {
  const Natural p2 = mul(p, p);
  Natural total = mul_small(p, static_cast<std::uint32_t>(a * a));
  total += mul_small(p2, static_cast<std::uint32_t>(18 * a));
  total += mul_small(mul(p2, p), 108);
  return total;
}

// 2a p^2 + 12 p^3
Natural direct_f(int a, const Natural& p) {
  const Natural p2 = mul(p, p);
  Natural total = mul_small(p2, static_cast<std::uint32_t>(2 * a));
  total += mul_small(mul(p2, p), 12);
  return total;
}

StepResult decide(BranchState& s, IterationRow row, int b, Natural p_i) {
  const SignedResidual frac = row.frac_i;
  const Natural f = row.f_i;
  s.trace.push_back(std::move(row));
  if (frac.is_negative()) {
    return StepFail{SignedResidual::negative(add(frac.magnitude(), f))};
  }
  const auto order = frac.magnitude() <=> f;
  if (order == 0) return StepEqual{detail::root_from(s.a, p_i)};
  if (order < 0) return StepFail{SignedResidual::difference(frac.magnitude(), f)};
  s.p_prev = std::move(p_i);
  s.pow9.mul_small_assign(9);
  s.b_prev = b;
  ++s.i;
  return StepContinue{};
}

StepResult incremental_step(BranchState& s) {
  const int b = cube_select_digit(static_cast<int>(mod_small(s.n_i, 9)), s.a);
  const auto a2b = static_cast<std::uint32_t>(s.a * s.a * b);

  Natural p_i = mul_small(s.pow9, static_cast<std::uint32_t>(b));
  p_i += s.p_prev;

  IterationRow row;
  row.i = s.i;
  row.n_i = s.n_i;
  row.dr = digit_root(s.n_i);
  row.b_prev = s.b_prev;
  row.b_next = b;
  row.p_i = p_i;
  row.f_i = incremental_f(s.a, b, p_i, s.p_prev);

  SignedResidual diff = SignedResidual::difference(s.n_i, Natural(a2b));
  Natural mag = diff.magnitude();
  if (mag.div_small_assign(9) != 0) throw InternalFault("frac_i is not integral");
  row.frac_i = diff.is_negative() ? SignedResidual::negative(mag) : SignedResidual::positive(mag);

  const bool keep_going = !diff.is_negative() && mag > row.f_i;
  Natural next = keep_going ? *sub_checked(mag, row.f_i) : Natural{};
  StepResult r = decide(s, std::move(row), b, std::move(p_i));
  if (std::holds_alternative<StepContinue>(r)) s.n_i = std::move(next);
  return r;
}

StepResult direct_step(BranchState& s) {
  // N_i = (N0 - cubic_part(p_{i-1})) / 9^i, recomputed from scratch.
  auto remainder = sub_checked(s.n0, cubic_part(s.a, s.p_prev));
  if (!remainder) throw InternalFault("direct remainder went negative on a live branch");
  Natural n_i = std::move(*remainder);
  for (unsigned k = 0; k < s.i; ++k) {
    if (n_i.div_small_assign(9) != 0) throw InternalFault("remainder not divisible by 9^i");
  }
  s.n_i = n_i;

  const int b = cube_select_digit(static_cast<int>(mod_small(n_i, 9)), s.a);
  Natural p_i = mul_small(s.pow9, static_cast<std::uint32_t>(b));
  p_i += s.p_prev;

  IterationRow row;
  row.i = s.i;
  row.n_i = std::move(n_i);
  row.dr = digit_root(row.n_i);
  row.b_prev = s.b_prev;
  row.b_next = b;
  row.p_i = p_i;
  row.f_i = direct_f(s.a, p_i);

  SignedResidual lhs =
      SignedResidual::difference(s.n0, mul_small(p_i, static_cast<std::uint32_t>(s.a * s.a)));
  Natural mag = lhs.magnitude();
  if (mag.div_small_assign(9) != 0) throw InternalFault("direct frac_i is not integral");
  row.frac_i = lhs.is_negative() ? SignedResidual::negative(mag) : SignedResidual::positive(mag);
  return decide(s, std::move(row), b, std::move(p_i));
}

}  // namespace

SetupResult cube_setup(const Natural& n, int a) { return detail::setup_branch(n, a, 3, 54); }

int cube_select_digit(int target, int a) { return detail::digit_for(target, (a * a) % 9); }

StepResult cube_step(BranchState& state, CubeMode mode) {
  return mode == CubeMode::kDirect ? direct_step(state) : incremental_step(state);
}

BranchTrace run_cube_branch(const Natural& n, int a, CubeMode mode) {
  return detail::run_branch(n, a, cube_setup,
                            [mode](BranchState& s) { return cube_step(s, mode); });
}

Certificate cbrt_certify(const Natural& n, CubeMode mode) {
  return detail::certify(n, 3, [mode](const Natural& core, int a) {
    return run_cube_branch(core, a, mode);
  });
}

}  // namespace u18
