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

#include <chrono>
#include <cstdint>
#include <random>
#include <vector>

#include "u18/certificate.hpp"
#include "u18/natural.hpp"

namespace u18 {

// Random inputs for the iteration-count harness. All generators draw from
// std::mt19937_64, whose output sequence is fixed by the C++ standard, so a
// seed reproduces the same inputs on every platform.
using BenchRng = std::mt19937_64;

// Uniform over [2^(bits-1), 2^bits). bits >= 1.
Natural random_natural(std::size_t bits, BenchRng& rng);
// Same size, adjusted to be coprime to 6. bits >= 4.
Natural random_coprime6(std::size_t bits, BenchRng& rng);
// (random_coprime6(root_bits))^e.
Natural random_power(std::size_t root_bits, unsigned e, BenchRng& rng);

enum class BenchInputKind { kSquare, kRandom };
enum class BenchMode { kMixed, kSquares, kRandom };

struct BranchIterations {
  int a = 0;
  BranchOutcome outcome = BranchOutcome::kFail;
  unsigned iterations = 0;
};

struct BenchRecord {
  std::size_t size_bits = 0;  // requested size
  std::size_t n_bits = 0;     // actual bit length of the input
  BenchInputKind kind = BenchInputKind::kRandom;
  Natural input;
  int a = 0;  // winning branch, else the first candidate, else 0
  unsigned iterations_measured = 0;
  unsigned iterations_predicted = 0;
  Verdict verdict = Verdict::kNotRoot;
  bool oracle_agrees = false;
  std::vector<BranchIterations> branches;
  std::chrono::nanoseconds elapsed{0};
};

struct BenchConfig {
  std::vector<std::size_t> bit_sizes;
  std::size_t count_per_size = 10;
  std::uint64_t seed = 1;
  // kMixed alternates square, random, square, ...
  BenchMode mode = BenchMode::kMixed;
};

// Throws InputError for sizes below 8 bits.
std::vector<BenchRecord> bench_run(const BenchConfig& config);

struct BenchSummary {
  std::size_t records = 0;
  std::size_t branches_compared = 0;  // branches that ran the loop
  std::size_t branches_within_one = 0;
  double mean_abs_deviation = 0.0;    // over compared branches
  std::size_t oracle_mismatches = 0;
};

BenchSummary summarize(const std::vector<BenchRecord>& records);

}  // namespace u18
