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

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace u18 {

// Arbitrary-precision nonnegative integer.
//
// Stored as little-endian 32-bit limbs with no high zero limbs, so zero is
// the empty limb vector and every value has exactly one representation.
// Values are immutable from the outside; the compound-assignment members
// exist so the engines can update their running state without reallocating.
class Natural {
 public:
  using Limb = std::uint32_t;

  Natural() = default;
  explicit Natural(std::uint64_t value);

  // Accepts one or more ASCII digits; leading zeros are allowed.
  // Throws InputError on empty input or any non-digit character.
  static Natural parse_decimal(std::string_view text);
  std::string to_decimal() const;

  bool is_zero() const { return limbs_.empty(); }
  bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1U) != 0; }
  std::size_t bit_length() const;
  std::optional<std::uint64_t> to_u64() const;
  std::span<const Limb> limbs() const { return limbs_; }

  // Top 53 significant bits as a double and the binary exponent of the
  // lowest retained bit: value ~= mantissa * 2^exponent.
  std::pair<double, int> approx_log2_parts() const;

  Natural& operator+=(const Natural& rhs);
  Natural& operator+=(std::uint32_t rhs);
  // Precondition: rhs <= *this. Throws InternalFault otherwise.
  Natural& operator-=(const Natural& rhs);
  Natural& operator-=(std::uint32_t rhs);
  Natural& mul_small_assign(std::uint32_t m);
  // Returns the remainder. d must be nonzero.
  std::uint32_t div_small_assign(std::uint32_t d);

  friend std::strong_ordering operator<=>(const Natural& x, const Natural& y);
  friend bool operator==(const Natural& x, const Natural& y) = default;

  static Natural from_limbs(std::vector<Limb> limbs);

 private:
  void trim();

  std::vector<Limb> limbs_;
};

std::ostream& operator<<(std::ostream& os, const Natural& n);

Natural add(const Natural& x, const Natural& y);
// Empty when y > x.
std::optional<Natural> sub_checked(const Natural& x, const Natural& y);
std::strong_ordering compare(const Natural& x, const Natural& y);

Natural mul_small(const Natural& x, std::uint32_t m);
Natural mul(const Natural& x, const Natural& y);
Natural pow(const Natural& x, unsigned e);

struct SmallDivision {
  Natural quotient;
  std::uint32_t remainder;
};

// Short division by a one-limb constant. Throws DomainError for d = 0.
SmallDivision div_small(const Natural& x, std::uint32_t d);
std::uint32_t mod_small(const Natural& x, std::uint32_t d);

// Iterated decimal digit sum: 0 for zero, else 1..9. Computed from the
// remainder mod 9.
int digit_root(const Natural& x);
// The same quantity obtained by literally summing decimal digits until one
// digit remains. Slow; kept for cross-checking and display.
int digit_root_by_digit_sum(std::string_view decimal);

// x * 9^i.
Natural shift9(const Natural& x, unsigned i);

inline Natural operator+(const Natural& x, const Natural& y) { return add(x, y); }
inline Natural operator*(const Natural& x, const Natural& y) { return mul(x, y); }

// Sign plus magnitude; only used to report negative differences.
class SignedResidual {
 public:
  enum class Sign { kNegative = -1, kZero = 0, kPositive = 1 };

  SignedResidual() = default;
  static SignedResidual positive(Natural magnitude);
  static SignedResidual negative(Natural magnitude);
  // x - y.
  static SignedResidual difference(const Natural& x, const Natural& y);

  Sign sign() const { return sign_; }
  const Natural& magnitude() const { return magnitude_; }
  bool is_negative() const { return sign_ == Sign::kNegative; }
  std::string to_decimal() const;

  friend bool operator==(const SignedResidual&, const SignedResidual&) = default;

 private:
  SignedResidual(Sign sign, Natural magnitude);

  Sign sign_ = Sign::kZero;
  Natural magnitude_;
};

std::ostream& operator<<(std::ostream& os, const SignedResidual& r);

}  // namespace u18
