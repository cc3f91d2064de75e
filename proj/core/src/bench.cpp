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

#include "u18/bench.hpp"

#include <cstdlib>

#include "u18/errors.hpp"
#include "u18/oracle.hpp"
#include "u18/sqrt_engine.hpp"

namespace u18 {

Natural random_natural(std::size_t bits, BenchRng& rng) {
  if (bits == 0) throw InputError("bit size must be positive");
  std::vector<Natural::Limb> limbs((bits + 31) / 32);
  for (std::size_t i = 0; i < limbs.size(); i += 2) {
    const std::uint64_t word = rng();
    limbs[i] = static_cast<Natural::Limb>(word);
    if (i + 1 < limbs.size()) limbs[i + 1] = static_cast<Natural::Limb>(word >> 32);
  }
  const std::size_t top_bit = (bits - 1) % 32;
  Natural::Limb& top = limbs.back();
  top &= top_bit == 31 ? ~Natural::Limb{0} : ((Natural::Limb{1} << (top_bit + 1)) - 1);
  top |= Natural::Limb{1} << top_bit;
  return Natural::from_limbs(std::move(limbs));
}

Natural random_coprime6(std::size_t bits, BenchRng& rng) {
  if (bits < 4) throw InputError("coprime-to-6 sampling needs at least 4 bits");
  Natural n = random_natural(bits, rng);
  if (!n.is_odd()) n += 1U;
  if (mod_small(n, 3) == 0) {
    // n +- 2 stays odd and leaves the multiple of 3; keep the bit length.
    Natural up = add(n, Natural(2));
    if (up.bit_length() == bits) {
      n = std::move(up);
    } else {
      n -= 2U;
    }
  }
  return n;
}

Natural random_power(std::size_t root_bits, unsigned e, BenchRng& rng) {
  return pow(random_coprime6(root_bits, rng), e);
}

std::vector<BenchRecord> bench_run(const BenchConfig& config) {
  BenchRng rng(config.seed);
  std::vector<BenchRecord> records;
  records.reserve(config.bit_sizes.size() * config.count_per_size);
  for (std::size_t bits : config.bit_sizes) {
    if (bits < 8) throw InputError("bench bit sizes must be at least 8");
    for (std::size_t j = 0; j < config.count_per_size; ++j) {
      BenchRecord rec;
      rec.size_bits = bits;
      const bool square = config.mode == BenchMode::kSquares ||
                          (config.mode == BenchMode::kMixed && j % 2 == 0);
      rec.kind = square ? BenchInputKind::kSquare : BenchInputKind::kRandom;
      rec.input = square ? random_power(bits / 2, 2, rng) : random_coprime6(bits, rng);
      rec.n_bits = rec.input.bit_length();

      const auto start = std::chrono::steady_clock::now();
      const Certificate cert = sqrt_certify(rec.input);
      rec.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now() - start);

      rec.verdict = cert.verdict;
      rec.iterations_predicted = predicted_iterations(cert.norm.core);
      for (const auto& b : cert.branches) {
        rec.branches.push_back({b.a, b.outcome, b.iterations()});
      }
      if (const BranchTrace* w = cert.winning_branch()) {
        rec.a = w->a;
        rec.iterations_measured = w->iterations();
      } else if (!cert.branches.empty()) {
        rec.a = cert.branches.front().a;
        rec.iterations_measured = cert.branches.front().iterations();
      }
      const RootResult oracle = isqrt_oracle(rec.input);
      rec.oracle_agrees = oracle.exact == cert.exact() && (!oracle.exact || oracle.root == *cert.root);
      records.push_back(std::move(rec));
    }
  }
  return records;
}

BenchSummary summarize(const std::vector<BenchRecord>& records) {
  BenchSummary s;
  s.records = records.size();
  double total = 0.0;
  for (const auto& r : records) {
    if (!r.oracle_agrees) ++s.oracle_mismatches;
    for (const auto& b : r.branches) {
      if (b.outcome != BranchOutcome::kEqual && b.outcome != BranchOutcome::kFail) continue;
      const long dev = std::labs(static_cast<long>(b.iterations) -
                                 static_cast<long>(r.iterations_predicted));
      ++s.branches_compared;
      if (dev <= 1) ++s.branches_within_one;
      total += static_cast<double>(dev);
    }
  }
  if (s.branches_compared != 0) s.mean_abs_deviation = total / static_cast<double>(s.branches_compared);
  return s;
}

}  // namespace u18
