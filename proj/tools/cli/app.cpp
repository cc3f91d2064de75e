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

#include <map>

#include <CLI11.hpp>

#include "commands.hpp"

namespace u18::cli {

namespace {

const std::map<std::string, Format> kFormats = {{"table", Format::kTable}, {"json", Format::kJson}};
const std::map<std::string, BenchMode> kModes = {
    {"mixed", BenchMode::kMixed}, {"squares", BenchMode::kSquares}, {"random", BenchMode::kRandom}};

}  // namespace

int run(int argc, const char* const* argv, Streams io) {
  CLI::App app{"Perfect square and cube certification over residues mod 18"};
  app.name("u18root");
  app.require_subcommand(1);

  std::vector<std::string> inputs;
  Format format = Format::kTable;

  auto* classify = app.add_subcommand("classify", "Normalize and classify values mod 18");
  classify->add_option("values", inputs, "Decimal values, or - for stdin")->required();
  classify->add_option("--format", format)->transform(CLI::CheckedTransformer(kFormats));

  RootOptions root_opts;
  auto* root = app.add_subcommand("root", "Certify square or cube roots");
  root->add_option("values", inputs, "Decimal values, or - for stdin")->required();
  root->add_option("--root", root_opts.exponent, "Root degree")->check(CLI::IsMember({2U, 3U}));
  root->add_flag("--trace", root_opts.trace, "Print the per-step table");
  root->add_flag("--all-branches", root_opts.all_branches, "Include failing branches");
  root->add_flag("--direct", root_opts.direct_cube,
                 "Cubes: evaluate each step from N0 instead of the running remainder");
  root->add_option("--format", root_opts.format)->transform(CLI::CheckedTransformer(kFormats));

  auto* filter = app.add_subcommand("filter", "Square vs twin-prime-product residue filter");
  filter->add_option("values", inputs, "Decimal values, or - for stdin")->required();
  filter->add_option("--format", format)->transform(CLI::CheckedTransformer(kFormats));

  BenchOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "Measured vs predicted iteration counts");
  bench->add_option("--bits", bench_opts.bits, "Input sizes in bits")->delimiter(',');
  bench->add_option("--count", bench_opts.count, "Inputs per size");
  bench->add_option("--seed", bench_opts.seed, "mt19937_64 seed");
  bench->add_option("--mode", bench_opts.mode)->transform(CLI::CheckedTransformer(kModes));
  bench->add_flag("--timing", bench_opts.timing, "Append per-record wall time (not reproducible)");
  bench->add_option("--format", bench_opts.format)->transform(CLI::CheckedTransformer(kFormats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*classify) return cmd_classify(inputs, format, io);
  if (*root) return cmd_root(inputs, root_opts, io);
  if (*filter) return cmd_filter(inputs, format, io);
  return cmd_bench(bench_opts, io);
}

}  // namespace u18::cli
