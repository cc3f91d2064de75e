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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "u18/bench.hpp"
#include "u18/certificate.hpp"

namespace u18::cli {

// Process exit codes.
inline constexpr int kExitExact = 0;
inline constexpr int kExitNotRoot = 1;
inline constexpr int kExitUsage = 2;

enum class Format { kTable, kJson };

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

struct RootOptions {
  unsigned exponent = 2;
  bool trace = false;
  bool all_branches = false;
  bool direct_cube = false;
  Format format = Format::kTable;
};

struct BenchOptions {
  std::vector<std::size_t> bits{32};
  std::size_t count = 10;
  std::uint64_t seed = 1;
  BenchMode mode = BenchMode::kMixed;
  bool timing = false;
  Format format = Format::kTable;
};

// Each command takes decimal inputs; "-" pulls one value per line from
// Streams::in. Records go to out in input order, diagnostics to err.
int cmd_classify(const std::vector<std::string>& inputs, Format format, Streams io);
int cmd_root(const std::vector<std::string>& inputs, const RootOptions& opts, Streams io);
int cmd_filter(const std::vector<std::string>& inputs, Format format, Streams io);
int cmd_bench(const BenchOptions& opts, Streams io);

// Renders one certificate the way `root` prints it.
void write_certificate(const Certificate& cert, const RootOptions& opts, std::ostream& out);

// Parses argv and dispatches. Returns the process exit code.
int run(int argc, const char* const* argv, Streams io);

}  // namespace u18::cli
