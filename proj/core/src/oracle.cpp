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

#include "u18/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "u18/errors.hpp"

namespace u18 {

namespace {

Natural power_of_two(std::size_t k) {
  std::vector<Natural::Limb> limbs(k / 32 + 1, 0);
  limbs.back() = Natural::Limb{1} << (k % 32);
  return Natural::from_limbs(std::move(limbs));
}

}  // namespace

RootResult iroot_oracle(const Natural& n, unsigned e) {
  if (e == 0) throw DomainError("root exponent must be positive");
  if (n.is_zero()) return {Natural{}, true};
  // 2^(b-1) <= n < 2^b, so lo^e <= n < hi^e.
  const std::size_t b = n.bit_length();
  const std::size_t lo_exp = (b - 1) / e;
  Natural lo = power_of_two(lo_exp);
  Natural hi = power_of_two(lo_exp + 1);
  Natural one(1);
  while (add(lo, one) < hi) {
    Natural mid = add(lo, hi);
    mid.div_small_assign(2);
    if (pow(mid, e) <= n) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  const bool exact = pow(lo, e) == n;
  return {std::move(lo), exact};
}

std::vector<int> zeroless_base9(const Natural& p) {
  if (p.is_zero()) throw DomainError("zeroless base-9 representation needs p >= 1");
  std::vector<int> digits;
  Natural rest = p;
  while (!rest.is_zero()) {
    auto r = mod_small(rest, 9);
    const std::uint32_t digit = r == 0 ? 9 : r;
    rest -= digit;
    rest.div_small_assign(9);
    digits.push_back(static_cast<int>(digit));
  }
  return digits;
}

Natural from_zeroless_base9(const std::vector<int>& digits) {
  Natural p;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    p.mul_small_assign(9);
    p += static_cast<std::uint32_t>(*it);
  }
  return p;
}

unsigned predicted_iterations(const Natural& n) {
  if (n < Natural(361)) return 0;
  const auto [mantissa, exponent] = n.approx_log2_parts();
  const double log2_n = std::log2(mantissa) + exponent;
  const double i = (log2_n / 2.0 - 1.0) / std::log2(9.0) - 1.5;
  return static_cast<unsigned>(std::max(0L, std::lround(i)));
}

}  // namespace u18
