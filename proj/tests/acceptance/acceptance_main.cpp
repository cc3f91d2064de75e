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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "u18/bench.hpp"
#include "u18/cbrt_engine.hpp"
#include "u18/oracle.hpp"
#include "u18/residue.hpp"
#include "u18/sqrt_engine.hpp"
#include "u18/twin_filter.hpp"

namespace {

using namespace u18;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures; the first few are kept for the report.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  void note(const std::string& s) { info_ += (info_.empty() ? "" : ", ") + s; }
  Outcome outcome() const {
    std::string d = info_;
    if (failures_ != 0) {
      d += (d.empty() ? "" : " | ") + std::to_string(failures_) + " failure(s): " + notes_;
    }
    return {failures_ == 0, d};
  }

 private:
  std::size_t failures_ = 0;
  std::string notes_;
  std::string info_;
};

std::string run_cli(std::vector<std::string> args, int* code) {
  args.insert(args.begin(), "u18root");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in;
  std::ostringstream out, err;
  *code = cli::run(static_cast<int>(argv.size()), argv.data(), {in, out, err});
  return out.str();
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> t;
  std::string w;
  while (ss >> w) t.push_back(w);
  return t;
}

// Table rows of the branch section that starts with "branch a=<a> ".
struct ParsedBranch {
  std::string header;
  std::vector<std::vector<std::string>> full_rows;  // i N DR b_i b_next p frac f
  std::vector<std::string> final_row;               // i N b_i
};

ParsedBranch parse_branch(const std::string& out, int a) {
  ParsedBranch pb;
  std::istringstream lines(out);
  std::string line;
  bool inside = false;
  while (std::getline(lines, line)) {
    if (line.rfind("branch ", 0) == 0) {
      inside = line.rfind("branch a=" + std::to_string(a) + " ", 0) == 0;
      if (inside) pb.header = line;
      continue;
    }
    if (!inside) continue;
    auto t = split(line);
    if (t.size() == 8 && t[0] != "i") pb.full_rows.push_back(t);
    if (t.size() == 3 && line[0] != ' ') pb.final_row = t;
  }
  return pb;
}

double millis(Clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); }

double median_certify_ms(const Natural& n, unsigned e) {
  std::vector<double> samples;
  for (int r = 0; r < 11; ++r) {
    const auto t0 = Clock::now();
    const Certificate c = e == 2 ? sqrt_certify(n) : cbrt_certify(n);
    samples.push_back(millis(Clock::now() - t0));
    if (!c.exact()) return 1e9;
  }
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

void expect_row(Check& c, const std::vector<std::string>& row, const std::vector<std::string>& want,
                const std::string& tag) {
  c.expect(row == want, tag + " row mismatch");
}

Outcome criterion_fig5() {
  Check c;
  int code = -1;
  const std::string out = run_cli({"root", "--root", "2", "--trace", "1429822969"}, &code);
  c.expect(code == 0, "exit code");
  c.expect(out.find("verdict=exact root=37813") != std::string::npos, "root 37813");
  const ParsedBranch b = parse_branch(out, 13);
  c.expect(b.header.find("n0=39717300") != std::string::npos, "N0");
  c.expect(b.full_rows.size() == 4, "row count");
  if (b.full_rows.size() == 4) {
    expect_row(c, b.full_rows[0], {"0", "39717300", "3", "0", "3", "3", "4413029", "9"}, "i=0");
    expect_row(c, b.full_rows[1], {"1", "4413020", "5", "3", "8", "75", "490324", "624"}, "i=1");
    expect_row(c, b.full_rows[2], {"2", "489700", "1", "8", "7", "642", "54401", "5019"}, "i=2");
    expect_row(c, b.full_rows[3], {"3", "49382", "8", "7", "2", "2100", "5484", "5484"}, "i=3");
  }
  c.expect(b.final_row == std::vector<std::string>{"4", "0", "2"}, "residual row N_4 = 0");
  const double ms = median_certify_ms(Natural(1429822969), 2);
  c.expect(ms < 1.0, "certification took " + std::to_string(ms) + " ms");
  c.note("median " + std::to_string(ms) + " ms");
  return c.outcome();
}

Outcome criterion_fig6() {
  Check c;
  int code = -1;
  const std::string out =
      run_cli({"root", "--root", "2", "--trace", "--all-branches", "1429822969"}, &code);
  const ParsedBranch b = parse_branch(out, 5);
  c.expect(b.header.find("outcome=fail") != std::string::npos, "verdict Fail");
  c.expect(b.header.find("n0=39717304") != std::string::npos, "N0");
  c.expect(b.header.find("iterations=3") != std::string::npos, "terminates at i=3");
  c.expect(b.full_rows.size() == 4, "row count");
  if (b.full_rows.size() == 4) {
    expect_row(c, b.full_rows[0], {"0", "39717304", "7", "0", "5", "5", "4413031", "25"}, "i=0");
    expect_row(c, b.full_rows[1], {"1", "4413006", "9", "5", "9", "86", "490329", "819"}, "i=1");
    expect_row(c, b.full_rows[2], {"2", "489510", "9", "9", "9", "815", "54385", "8109"}, "i=2");
    expect_row(c, b.full_rows[3], {"3", "46276", "7", "9", "5", "4460", "5139", "26375"}, "i=3");
  }
  c.expect(b.final_row == std::vector<std::string>{"4", "-21236", "5"}, "residual row N_4 = -21236");
  return c.outcome();
}

Outcome criterion_fig7() {
  Check c;
  int code = -1;
  const std::string out = run_cli({"root", "--root", "3", "--trace", "6177847762549"}, &code);
  c.expect(code == 0, "exit code");
  c.expect(out.find("verdict=exact root=18349") != std::string::npos, "root 18349");
  const ParsedBranch b = parse_branch(out, 7);
  c.expect(b.header.find("n0=114404588189") != std::string::npos, "N0");
  const std::vector<std::string> n_col = {"114404588189", "12711620747", "1412260428", "153305851"};
  const std::vector<std::string> dr_col = {"8", "2", "3", "4"};
  const std::vector<std::string> b_col = {"2", "5", "3", "1"};
  const std::vector<std::string> frac_col = {"12711620899", "1412402278", "156917809", "17033978"};
  const std::vector<std::string> f_col = {"152", "141850", "3611958", "17033978"};
  c.expect(b.full_rows.size() == 4, "row count");
  for (std::size_t i = 0; i < std::min<std::size_t>(4, b.full_rows.size()); ++i) {
    const auto& r = b.full_rows[i];
    c.expect(r[1] == n_col[i] && r[2] == dr_col[i] && r[4] == b_col[i], "N/DR/b at i=" + std::to_string(i));
    c.expect(r[6] == frac_col[i], "frac at i=" + std::to_string(i));
    c.expect(r[7] == f_col[i], "f at i=" + std::to_string(i));
  }
  c.expect(!b.final_row.empty() && b.final_row[1] == "0", "N_4 = 0");
  return c.outcome();
}

Outcome criterion_exhaustive() {
  Check c;
  const auto t0 = Clock::now();
  std::size_t squares = 0, cubes = 0;
  for (std::uint64_t v = 1; v <= 1000000; ++v) {
    const Natural n(v);
    const Certificate sq = sqrt_certify(n);
    const RootResult so = isqrt_oracle(n);
    c.expect(sq.exact() == so.exact && (!so.exact || *sq.root == so.root), "sqrt n=" + std::to_string(v));
    const Certificate cu = cbrt_certify(n);
    const RootResult co = icbrt_oracle(n);
    c.expect(cu.exact() == co.exact && (!co.exact || *cu.root == co.root), "cbrt n=" + std::to_string(v));
    squares += so.exact;
    cubes += co.exact;
  }
  const double seconds = millis(Clock::now() - t0) / 1000.0;
  c.expect(squares == 1000 && cubes == 100, "power counts");
  c.expect(seconds < 300.0, "took " + std::to_string(seconds) + " s");
  c.note(std::to_string(squares) + " squares, " + std::to_string(cubes) + " cubes, " +
         std::to_string(seconds) + " s");
  return c.outcome();
}

bool agrees(const Certificate& cert, const RootResult& oracle) {
  return cert.exact() == oracle.exact && (!oracle.exact || *cert.root == oracle.root);
}

Outcome criterion_randomized() {
  Check c;
  BenchRng rng(20261017);
  for (int t = 0; t < 10000; ++t) {
    Natural n(rng());
    if (n.is_zero()) n = Natural(1);
    c.expect(agrees(sqrt_certify(n), isqrt_oracle(n)), "sqrt 64-bit " + n.to_decimal());
    c.expect(agrees(cbrt_certify(n), icbrt_oracle(n)), "cbrt 64-bit " + n.to_decimal());
  }
  double worst_2048_ms = 0.0;
  for (std::size_t bits : {256U, 1024U, 2048U}) {
    for (unsigned e : {2U, 3U}) {
      for (int t = 0; t < 1000; ++t) {
        // Mix in factors of 2 and 3 so normalization is exercised too.
        Natural root = random_coprime6(bits / e - 2, rng);
        if (t % 3 == 1) root.mul_small_assign(2);
        if (t % 4 == 2) root.mul_small_assign(3);
        const Natural n = pow(root, e);
        const auto t0 = Clock::now();
        const Certificate cert = e == 2 ? sqrt_certify(n) : cbrt_certify(n);
        const double ms = millis(Clock::now() - t0);
        if (bits == 2048) worst_2048_ms = std::max(worst_2048_ms, ms);
        c.expect(cert.exact() && *cert.root == root, "constructed power " + std::to_string(bits) + "b");
        if (t < 100) {
          // A non-power neighbour, checked against the oracle.
          const Natural near = add(n, Natural(2));
          const Certificate nc = e == 2 ? sqrt_certify(near) : cbrt_certify(near);
          c.expect(agrees(nc, iroot_oracle(near, e)), "neighbour " + std::to_string(bits) + "b");
        }
      }
    }
  }
  c.expect(worst_2048_ms < 1000.0, "2048-bit certification took " + std::to_string(worst_2048_ms) + " ms");
  c.note("worst 2048-bit certification " + std::to_string(worst_2048_ms) + " ms");
  return c.outcome();
}

Outcome criterion_iteration_model() {
  Check c;
  const auto records = bench_run({{64, 128, 256, 512}, 100, 22, BenchMode::kSquares});
  const BenchSummary s = summarize(records);
  const double share = static_cast<double>(s.branches_within_one) / static_cast<double>(s.branches_compared);
  c.expect(s.oracle_mismatches == 0, "oracle mismatch in bench");
  c.expect(share >= 0.95, "within-one share " + std::to_string(share));
  for (std::size_t bits : {64U, 128U, 256U, 512U}) {
    std::size_t compared = 0, within = 0;
    for (const auto& r : records) {
      if (r.size_bits != bits) continue;
      for (const auto& b : r.branches) {
        if (b.outcome != BranchOutcome::kEqual && b.outcome != BranchOutcome::kFail) continue;
        ++compared;
        within += std::labs(static_cast<long>(b.iterations) - static_cast<long>(r.iterations_predicted)) <= 1;
      }
    }
    c.expect(static_cast<double>(within) >= 0.95 * static_cast<double>(compared),
             std::to_string(bits) + "-bit share below 95%");
    c.note(std::to_string(bits) + "b " + std::to_string(within) + "/" + std::to_string(compared));
  }
  const Certificate anchor = sqrt_certify(Natural(1429822969));
  const unsigned predicted = predicted_iterations(Natural(1429822969));
  c.expect(anchor.winning_branch() != nullptr && anchor.winning_branch()->iterations() == 3, "anchor measured");
  c.expect(predicted == 3, "anchor predicted");
  c.note("overall " + std::to_string(share * 100.0) + "% within 1, anchor i=3 vs 3");
  return c.outcome();
}

Outcome criterion_power_table() {
  Check c;
  // Rows a = 1, 5, 7, 11, 13, 17; columns e = 6n, 1+6n, ..., 5+6n.
  const int published[6][6] = {
      {1, 1, 1, 1, 1, 1},   {1, 5, 7, 17, 13, 11}, {1, 7, 13, 1, 7, 13},
      {1, 11, 13, 17, 7, 5}, {1, 13, 7, 1, 13, 7}, {1, 17, 1, 17, 1, 17},
  };
  for (std::size_t r = 0; r < 6; ++r) {
    const int a = kUnitsMod18[r];
    for (unsigned e = 0; e < 6; ++e) {
      for (unsigned n = 0; n < 4; ++n) {
        int direct = 1;
        for (unsigned k = 0; k < e + 6 * n; ++k) direct = direct * a % 18;
        const int table = u18_power_table(ResidueClass(a), e + 6 * n).value();
        c.expect(table == direct && table == published[r][e],
                 "a=" + std::to_string(a) + " e=" + std::to_string(e + 6 * n));
      }
    }
  }
  c.expect(u18_power_table(ResidueClass(5), 4).value() == 13, "5^4 -> [13]");
  c.expect(mod_small(pow(Natural(5), 4), 18) == 13, "625 mod 18");
  return c.outcome();
}

Outcome criterion_twin_table() {
  Check c;
  struct Row {
    std::uint64_t lo, hi;
    int c_lo, c_hi;
    TwinType type;
  };
  const Row rows[] = {
      {5, 7, 5, 7, TwinType::kA},        {11, 13, 11, 13, TwinType::kB},
      {17, 19, 17, 1, TwinType::kC},     {29, 31, 11, 13, TwinType::kB},
      {41, 43, 5, 7, TwinType::kA},      {59, 61, 5, 7, TwinType::kA},
      {71, 73, 17, 1, TwinType::kC},     {101, 103, 11, 13, TwinType::kB},
      {107, 109, 17, 1, TwinType::kC},   {137, 139, 11, 13, TwinType::kB},
      {149, 151, 5, 7, TwinType::kA},    {179, 181, 17, 1, TwinType::kC},
  };
  for (const auto& r : rows) {
    const std::string tag = "{" + std::to_string(r.lo) + "," + std::to_string(r.hi) + "}";
    c.expect(residue_class_of(Natural(r.lo)).value() == r.c_lo, tag + " lower class");
    c.expect(residue_class_of(Natural(r.hi)).value() == r.c_hi, tag + " upper class");
    c.expect(twin_type(Natural(r.lo), Natural(r.hi)) == r.type, tag + " type");
    const Natural product(r.lo * r.hi);
    c.expect(mod_small(product, 18) == 17, tag + " product class");
    c.expect(discriminate(product).kind == Discrimination::kTwinProductCandidate, tag + " filter");
  }
  return c.outcome();
}

Outcome criterion_digit_root_mapping() {
  Check c;
  BenchRng rng(9);
  std::size_t seen_2 = 0, seen_4 = 0, seen_8 = 0;
  for (int t = 0; t < 100000; ++t) {
    // Alternate one-word and multi-word values.
    const Natural n = t % 2 == 0 ? random_coprime6(4 + rng() % 60, rng) : random_coprime6(64 + rng() % 400, rng);
    const int cls = residue_class_of(n).value();
    c.expect(static_cast<std::uint32_t>(cls) == div_small(n, 18).remainder, "n=" + n.to_decimal());
    const int dr = digit_root_by_digit_sum(n.to_decimal());
    if (dr == 2) { ++seen_2; c.expect(cls == 11, "d=2 -> 11"); }
    if (dr == 4) { ++seen_4; c.expect(cls == 13, "d=4 -> 13"); }
    if (dr == 8) { ++seen_8; c.expect(cls == 17, "d=8 -> 17"); }
  }
  c.expect(seen_2 > 0 && seen_4 > 0 && seen_8 > 0, "exceptional mappings exercised");
  c.note("d=2:" + std::to_string(seen_2) + " d=4:" + std::to_string(seen_4) + " d=8:" + std::to_string(seen_8));
  return c.outcome();
}

Outcome criterion_representation() {
  Check c;
  for (std::uint64_t p = 1; p <= 1000000; ++p) {
    const auto digits = zeroless_base9(Natural(p));
    const bool in_range = std::all_of(digits.begin(), digits.end(), [](int d) { return d >= 1 && d <= 9; });
    c.expect(in_range && from_zeroless_base9(digits) == Natural(p), "p=" + std::to_string(p));
  }
  for (int a : kUnitsMod18) {
    for (std::uint64_t p = 1; p <= 100000; ++p) {
      const Natural root(static_cast<std::uint64_t>(a) + 18 * p);
      const BranchTrace t = run_square_branch(mul(root, root), a);
      bool ok = t.outcome == BranchOutcome::kEqual && t.core_root && *t.core_root == root;
      if (ok) {
        const auto expected = zeroless_base9(Natural(p));
        ok = expected.size() == t.rows.size();
        for (std::size_t i = 0; ok && i < expected.size(); ++i) ok = t.rows[i].b_next == expected[i];
      }
      c.expect(ok, "a=" + std::to_string(a) + " p=" + std::to_string(p));
    }
  }
  return c.outcome();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 golden trace, square root found", criterion_fig5},
      {"AC2 golden trace, failing branch a=5", criterion_fig6},
      {"AC3 golden trace, cube root", criterion_fig7},
      {"AC4 oracle equivalence, exhaustive 1..10^6", criterion_exhaustive},
      {"AC5 oracle equivalence, randomized + 2048-bit timing", criterion_randomized},
      {"AC6 iteration model within +-1 for >=95%", criterion_iteration_model},
      {"AC7 mod-18 power table", criterion_power_table},
      {"AC8 twin-prime table", criterion_twin_table},
      {"AC9 digit-root class mapping", criterion_digit_root_mapping},
      {"AC10 zeroless base-9 representation", criterion_representation},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = millis(Clock::now() - t0) / 1000.0;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " (" << secs << " s)";
    if (!o.detail.empty()) std::cout << " -- " << o.detail;
    std::cout << std::endl;
    failed += o.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
