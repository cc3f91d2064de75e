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

#include "u18/natural.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <utility>

#include "u18/errors.hpp"

namespace u18 {

namespace {

constexpr std::uint64_t kLimbBase = std::uint64_t{1} << 32;
constexpr std::uint32_t kDecimalChunk = 1'000'000'000;  // 10^9
constexpr int kDecimalChunkDigits = 9;

}  // namespace

Natural::Natural(std::uint64_t value) {
  while (value != 0) {
    limbs_.push_back(static_cast<Limb>(value));
    value >>= 32;
  }
}

Natural Natural::from_limbs(std::vector<Limb> limbs) {
  Natural n;
  n.limbs_ = std::move(limbs);
  n.trim();
  return n;
}

void Natural::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

Natural Natural::parse_decimal(std::string_view text) {
  if (text.empty()) throw InputError("empty decimal string");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw InputError("not a decimal digit string: '" + std::string(text) + "'");
    }
  }
  Natural n;
  std::size_t pos = 0;
  // Leading partial chunk so the rest are exactly nine digits.
  std::size_t head = text.size() % kDecimalChunkDigits;
  if (head == 0) head = kDecimalChunkDigits;
  while (pos < text.size()) {
    std::size_t len = pos == 0 ? head : kDecimalChunkDigits;
    std::uint32_t chunk = 0;
    std::uint32_t scale = 1;
    for (std::size_t j = 0; j < len; ++j) {
      chunk = chunk * 10 + static_cast<std::uint32_t>(text[pos + j] - '0');
      scale *= 10;
    }
    n.mul_small_assign(scale);
    n += chunk;
    pos += len;
  }
  return n;
}

std::string Natural::to_decimal() const {
  if (is_zero()) return "0";
  std::vector<std::uint32_t> chunks;
  Natural rest = *this;
  while (!rest.is_zero()) chunks.push_back(rest.div_small_assign(kDecimalChunk));
  std::string out = std::to_string(chunks.back());
  for (auto it = chunks.rbegin() + 1; it != chunks.rend(); ++it) {
    std::string part = std::to_string(*it);
    out.append(kDecimalChunkDigits - part.size(), '0');
    out += part;
  }
  return out;
}

std::size_t Natural::bit_length() const {
  if (limbs_.empty()) return 0;
  return 32 * (limbs_.size() - 1) + std::bit_width(limbs_.back());
}

std::optional<std::uint64_t> Natural::to_u64() const {
  if (limbs_.size() > 2) return std::nullopt;
  std::uint64_t v = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
  return v;
}

std::pair<double, int> Natural::approx_log2_parts() const {
  const std::size_t bits = bit_length();
  if (bits <= 64) return {static_cast<double>(*to_u64()), 0};
  // Gather the 64 most significant bits.
  const std::size_t low = bits - 64;
  std::uint64_t top = 0;
  for (std::size_t b = 0; b < 64; ++b) {
    std::size_t bit = low + b;
    std::uint64_t v = (limbs_[bit / 32] >> (bit % 32)) & 1U;
    top |= v << b;
  }
  return {static_cast<double>(top), static_cast<int>(low)};
}

Natural& Natural::operator+=(const Natural& rhs) {
  if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t s = carry + limbs_[i] + (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
    limbs_[i] = static_cast<Limb>(s);
    carry = s >> 32;
    if (carry == 0 && i >= rhs.limbs_.size()) break;
  }
  if (carry != 0) limbs_.push_back(static_cast<Limb>(carry));
  return *this;
}

Natural& Natural::operator+=(std::uint32_t rhs) {
  std::uint64_t carry = rhs;
  for (std::size_t i = 0; i < limbs_.size() && carry != 0; ++i) {
    std::uint64_t s = carry + limbs_[i];
    limbs_[i] = static_cast<Limb>(s);
    carry = s >> 32;
  }
  if (carry != 0) limbs_.push_back(static_cast<Limb>(carry));
  return *this;
}

Natural& Natural::operator-=(const Natural& rhs) {
  if (*this < rhs) throw InternalFault("Natural subtraction underflow");
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(limbs_[i]) - borrow -
                     (i < rhs.limbs_.size() ? static_cast<std::int64_t>(rhs.limbs_[i]) : 0);
    borrow = d < 0 ? 1 : 0;
    limbs_[i] = static_cast<Limb>(d + (borrow ? static_cast<std::int64_t>(kLimbBase) : 0));
    if (borrow == 0 && i >= rhs.limbs_.size()) break;
  }
  trim();
  return *this;
}

Natural& Natural::operator-=(std::uint32_t rhs) {
  return *this -= Natural(rhs);
}

Natural& Natural::mul_small_assign(std::uint32_t m) {
  if (m == 0) {
    limbs_.clear();
    return *this;
  }
  std::uint64_t carry = 0;
  for (Limb& limb : limbs_) {
    std::uint64_t p = static_cast<std::uint64_t>(limb) * m + carry;
    limb = static_cast<Limb>(p);
    carry = p >> 32;
  }
  if (carry != 0) limbs_.push_back(static_cast<Limb>(carry));
  return *this;
}

std::uint32_t Natural::div_small_assign(std::uint32_t d) {
  if (d == 0) throw DomainError("division by zero");
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | limbs_[i];
    limbs_[i] = static_cast<Limb>(cur / d);
    rem = cur % d;
  }
  trim();
  return static_cast<std::uint32_t>(rem);
}

std::strong_ordering operator<=>(const Natural& x, const Natural& y) {
  if (x.limbs_.size() != y.limbs_.size()) return x.limbs_.size() <=> y.limbs_.size();
  for (std::size_t i = x.limbs_.size(); i-- > 0;) {
    if (x.limbs_[i] != y.limbs_[i]) return x.limbs_[i] <=> y.limbs_[i];
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.to_decimal(); }

Natural add(const Natural& x, const Natural& y) {
  Natural r = x;
  r += y;
  return r;
}

std::optional<Natural> sub_checked(const Natural& x, const Natural& y) {
  if (x < y) return std::nullopt;
  Natural r = x;
  r -= y;
  return r;
}

std::strong_ordering compare(const Natural& x, const Natural& y) { return x <=> y; }

Natural mul_small(const Natural& x, std::uint32_t m) {
  Natural r = x;
  r.mul_small_assign(m);
  return r;
}

Natural mul(const Natural& x, const Natural& y) {
  if (x.is_zero() || y.is_zero()) return Natural{};
  auto a = x.limbs();
  auto b = y.limbs();
  std::vector<Natural::Limb> out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    const std::uint64_t ai = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t t = ai * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<Natural::Limb>(t);
      carry = t >> 32;
    }
    std::size_t k = i + b.size();
    while (carry != 0) {
      std::uint64_t t = static_cast<std::uint64_t>(out[k]) + carry;
      out[k] = static_cast<Natural::Limb>(t);
      carry = t >> 32;
      ++k;
    }
  }
  return Natural::from_limbs(std::move(out));
}

Natural pow(const Natural& x, unsigned e) {
  Natural result(1);
  Natural base = x;
  while (e != 0) {
    if (e & 1U) result = mul(result, base);
    e >>= 1;
    if (e != 0) base = mul(base, base);
  }
  return result;
}

SmallDivision div_small(const Natural& x, std::uint32_t d) {
  Natural q = x;
  std::uint32_t r = q.div_small_assign(d);
  return {std::move(q), r};
}

std::uint32_t mod_small(const Natural& x, std::uint32_t d) {
  if (d == 0) throw DomainError("division by zero");
  std::uint64_t rem = 0;
  auto limbs = x.limbs();
  for (std::size_t i = limbs.size(); i-- > 0;) rem = ((rem << 32) | limbs[i]) % d;
  return static_cast<std::uint32_t>(rem);
}

int digit_root(const Natural& x) {
  if (x.is_zero()) return 0;
  auto r = static_cast<int>(mod_small(x, 9));
  return r == 0 ? 9 : r;
}

int digit_root_by_digit_sum(std::string_view decimal) {
  std::string digits(decimal);
  while (digits.size() > 1) {
    std::uint64_t sum = 0;
    for (char c : digits) sum += static_cast<std::uint64_t>(c - '0');
    digits = std::to_string(sum);
  }
  return digits.empty() ? 0 : digits[0] - '0';
}

Natural shift9(const Natural& x, unsigned i) {
  Natural r = x;
  // 9^10 is the largest power of nine that fits in one limb.
  while (i >= 10) {
    r.mul_small_assign(3486784401U);
    i -= 10;
  }
  std::uint32_t tail = 1;
  while (i-- > 0) tail *= 9;
  r.mul_small_assign(tail);
  return r;
}

SignedResidual::SignedResidual(Sign sign, Natural magnitude)
    : sign_(magnitude.is_zero() ? Sign::kZero : sign), magnitude_(std::move(magnitude)) {}

SignedResidual SignedResidual::positive(Natural magnitude) {
  return {Sign::kPositive, std::move(magnitude)};
}

SignedResidual SignedResidual::negative(Natural magnitude) {
  return {Sign::kNegative, std::move(magnitude)};
}

SignedResidual SignedResidual::difference(const Natural& x, const Natural& y) {
  if (auto d = sub_checked(x, y)) return positive(std::move(*d));
  return negative(*sub_checked(y, x));
}

std::string SignedResidual::to_decimal() const {
  return (sign_ == Sign::kNegative ? "-" : "") + magnitude_.to_decimal();
}

std::ostream& operator<<(std::ostream& os, const SignedResidual& r) {
  return os << r.to_decimal();
}

}  // namespace u18
