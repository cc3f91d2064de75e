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

#include "commands.hpp"

#include <algorithm>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include <json.hpp>

#include "u18/cbrt_engine.hpp"
#include "u18/errors.hpp"
#include "u18/oracle.hpp"
#include "u18/residue.hpp"
#include "u18/sqrt_engine.hpp"
#include "u18/twin_filter.hpp"

namespace u18::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Calls fn(value) for every input, expanding "-" to stdin lines. Errors on
// one input are reported and do not stop the others.
template <typename Fn>
int for_each_input(const std::vector<std::string>& inputs, Streams io, Fn&& fn) {
  if (inputs.empty()) {
    io.err << "error: no inputs given\n";
    return kExitUsage;
  }
  int code = kExitExact;
  auto handle = [&](std::string_view raw) {
    const std::string_view text = trim(raw);
    if (text.empty()) return;
    try {
      code = std::max(code, fn(Natural::parse_decimal(text)));
    } catch (const InputError& e) {
      io.err << "error: " << e.what() << '\n';
      code = kExitUsage;
    } catch (const DomainError& e) {
      io.err << "error: " << e.what() << '\n';
      code = kExitUsage;
    }
  };
  for (const auto& arg : inputs) {
    if (arg == "-") {
      std::string line;
      while (std::getline(io.in, line)) handle(line);
    } else {
      handle(arg);
    }
  }
  return code;
}

std::string join(const std::vector<int>& values) {
  if (values.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) s += ',';
    s += std::to_string(values[i]);
  }
  return s;
}

// Left-aligned columns, two spaces apart, no trailing blanks.
void write_table(const std::vector<std::vector<std::string>>& rows, std::ostream& out) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line.append(widths[c] - row[c].size() + 2, ' ');
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << '\n';
  }
}

std::vector<const BranchTrace*> shown_branches(const Certificate& cert, const RootOptions& opts) {
  std::vector<const BranchTrace*> shown;
  for (const auto& b : cert.branches) {
    if (opts.all_branches || b.succeeded()) shown.push_back(&b);
  }
  return shown;
}

SignedResidual headline_residual(const Certificate& cert) {
  if (const BranchTrace* w = cert.winning_branch()) return w->residual;
  return cert.branches.empty() ? SignedResidual{} : cert.branches.front().residual;
}

unsigned headline_iterations(const Certificate& cert) {
  if (const BranchTrace* w = cert.winning_branch()) return w->iterations();
  unsigned most = 0;
  for (const auto& b : cert.branches) most = std::max(most, b.iterations());
  return most;
}

void write_trace_table(const Certificate& cert, const BranchTrace& branch, std::ostream& out) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"i", "N_i", "DR", "b_i", "b_{i+1}", "p_i", "frac_i", "f_i"});
  rows.push_back({"", cert.norm.core.to_decimal(), std::to_string(digit_root(cert.norm.core))});
  for (const auto& r : branch.rows) {
    rows.push_back({std::to_string(r.i), r.n_i.to_decimal(), std::to_string(r.dr),
                    std::to_string(r.b_prev), std::to_string(r.b_next), r.p_i.to_decimal(),
                    r.frac_i.to_decimal(), r.f_i.to_decimal()});
  }
  rows.push_back({std::to_string(branch.iterations() + 1), branch.residual.to_decimal(), "",
                  std::to_string(branch.final_digit)});
  write_table(rows, out);
}

void write_branch_line(const BranchTrace& b, std::ostream& out) {
  out << "branch a=" << b.a << " outcome=" << to_string(b.outcome);
  if (b.n0) out << " n0=" << *b.n0;
  out << " iterations=" << b.iterations() << " residual=" << b.residual;
  if (b.core_root) out << " root=" << *b.core_root;
  out << '\n';
}

Json branch_json(const BranchTrace& b, bool with_rows) {
  Json j;
  j["a"] = b.a;
  j["outcome"] = to_string(b.outcome);
  j["n0"] = b.n0 ? Json(b.n0->to_decimal()) : Json(nullptr);
  j["iterations"] = b.iterations();
  j["residual"] = b.residual.to_decimal();
  j["root"] = b.core_root ? Json(b.core_root->to_decimal()) : Json(nullptr);
  if (with_rows) {
    Json rows = Json::array();
    for (const auto& r : b.rows) {
      rows.push_back({{"i", r.i},
                      {"N_i", r.n_i.to_decimal()},
                      {"dr", r.dr},
                      {"b_i", r.b_prev},
                      {"b_next", r.b_next},
                      {"p_i", r.p_i.to_decimal()},
                      {"frac_i", r.frac_i.to_decimal()},
                      {"f_i", r.f_i.to_decimal()}});
    }
    j["rows"] = std::move(rows);
  }
  return j;
}

Json certificate_json(const Certificate& cert, const RootOptions& opts) {
  Json j;
  j["input"] = cert.input.to_decimal();
  j["exponent"] = cert.exponent;
  j["verdict"] = to_string(cert.verdict);
  j["root"] = cert.root ? Json(cert.root->to_decimal()) : Json(nullptr);
  j["k"] = cert.norm.k;
  j["l"] = cert.norm.l;
  j["core"] = cert.norm.core.to_decimal();
  j["class"] = cert.residue_class.value();
  j["reason"] = to_string(cert.reason);
  j["iterations"] = headline_iterations(cert);
  j["residual"] = headline_residual(cert).to_decimal();
  Json branches = Json::array();
  for (const BranchTrace* b : shown_branches(cert, opts)) branches.push_back(branch_json(*b, opts.trace));
  j["branches"] = std::move(branches);
  return j;
}

}  // namespace

void write_certificate(const Certificate& cert, const RootOptions& opts, std::ostream& out) {
  if (opts.format == Format::kJson) {
    out << certificate_json(cert, opts).dump() << '\n';
    return;
  }
  out << "input=" << cert.input << " exponent=" << cert.exponent
      << " verdict=" << to_string(cert.verdict);
  if (cert.root) out << " root=" << *cert.root;
  out << " k=" << cert.norm.k << " l=" << cert.norm.l << " core=" << cert.norm.core
      << " class=" << cert.residue_class.value() << " reason=" << to_string(cert.reason)
      << " iterations=" << headline_iterations(cert) << '\n';
  for (const BranchTrace* b : shown_branches(cert, opts)) {
    write_branch_line(*b, out);
    if (opts.trace && b->n0 && !b->rows.empty()) write_trace_table(cert, *b, out);
  }
}

int cmd_root(const std::vector<std::string>& inputs, const RootOptions& opts, Streams io) {
  if (opts.exponent != 2 && opts.exponent != 3) {
    io.err << "error: --root must be 2 or 3\n";
    return kExitUsage;
  }
  return for_each_input(inputs, io, [&](const Natural& n) {
    if (n.is_zero()) throw InputError("input must be a positive integer");
    const Certificate cert =
        opts.exponent == 2
            ? sqrt_certify(n)
            : cbrt_certify(n, opts.direct_cube ? CubeMode::kDirect : CubeMode::kIncremental);
    write_certificate(cert, opts, io.out);
    io.out.flush();
    return cert.exact() ? kExitExact : kExitNotRoot;
  });
}

int cmd_classify(const std::vector<std::string>& inputs, Format format, Streams io) {
  return for_each_input(inputs, io, [&](const Natural& n) {
    const Normalization norm = strip_factors(n);
    const ResidueClass cls = residue_class_of(norm.core);
    const CandidateSet sq = candidates_for_root(cls, 2);
    const CandidateSet cu = candidates_for_root(cls, 3);
    const bool trivial = n == Natural(1);
    if (format == Format::kJson) {
      Json j;
      j["input"] = n.to_decimal();
      j["k"] = norm.k;
      j["l"] = norm.l;
      j["core"] = norm.core.to_decimal();
      j["class"] = cls.value();
      j["dr"] = digit_root(norm.core);
      j["square_a"] = sq.a_values;
      j["cube_a"] = cu.a_values;
      j["square_feasible"] = root_feasible(norm, 2) && !sq.empty();
      j["cube_feasible"] = root_feasible(norm, 3) && !cu.empty();
      j["trivial"] = trivial;
      io.out << j.dump() << '\n';
    } else {
      io.out << "input=" << n << " k=" << norm.k << " l=" << norm.l << " core=" << norm.core
             << " class=" << cls.value() << " dr=" << digit_root(norm.core)
             << " square_a=" << join(sq.a_values) << " cube_a=" << join(cu.a_values)
             << " square_feasible=" << (root_feasible(norm, 2) && !sq.empty() ? "yes" : "no")
             << " cube_feasible=" << (root_feasible(norm, 3) && !cu.empty() ? "yes" : "no")
             << (trivial ? " trivial=yes" : "") << '\n';
    }
    io.out.flush();
    return kExitExact;
  });
}

int cmd_filter(const std::vector<std::string>& inputs, Format format, Streams io) {
  return for_each_input(inputs, io, [&](const Natural& n) {
    const FilterResult r = discriminate(n);
    if (format == Format::kJson) {
      Json j;
      j["input"] = n.to_decimal();
      j["core"] = r.norm.core.to_decimal();
      j["class"] = r.residue_class.value();
      j["result"] = to_string(r.kind);
      io.out << j.dump() << '\n';
    } else {
      io.out << "input=" << n << " core=" << r.norm.core << " class=" << r.residue_class.value()
             << " result=" << to_string(r.kind) << '\n';
    }
    io.out.flush();
    return kExitExact;
  });
}

namespace {

std::string_view kind_name(BenchInputKind k) {
  return k == BenchInputKind::kSquare ? "square" : "random";
}

}  // namespace

int cmd_bench(const BenchOptions& opts, Streams io) {
  BenchConfig config{opts.bits, opts.count, opts.seed, opts.mode};
  std::vector<BenchRecord> records;
  try {
    records = bench_run(config);
  } catch (const InputError& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const BenchSummary summary = summarize(records);
  if (opts.format == Format::kJson) {
    for (const auto& r : records) {
      Json j;
      j["size_bits"] = r.size_bits;
      j["n_bits"] = r.n_bits;
      j["kind"] = kind_name(r.kind);
      j["input"] = r.input.to_decimal();
      j["a"] = r.a;
      j["iterations_measured"] = r.iterations_measured;
      j["iterations_predicted"] = r.iterations_predicted;
      j["verdict"] = to_string(r.verdict);
      j["oracle_agrees"] = r.oracle_agrees;
      Json branches = Json::array();
      for (const auto& b : r.branches) {
        branches.push_back({{"a", b.a}, {"outcome", to_string(b.outcome)}, {"iterations", b.iterations}});
      }
      j["branches"] = std::move(branches);
      if (opts.timing) j["elapsed_ns"] = r.elapsed.count();
      io.out << j.dump() << '\n';
    }
    Json s;
    s["summary"] = true;
    s["records"] = summary.records;
    s["branches_compared"] = summary.branches_compared;
    s["branches_within_one"] = summary.branches_within_one;
    s["mean_abs_deviation"] = summary.mean_abs_deviation;
    s["oracle_mismatches"] = summary.oracle_mismatches;
    io.out << s.dump() << '\n';
  } else {
    for (const auto& r : records) {
      io.out << "size=" << r.size_bits << " bits=" << r.n_bits << " kind=" << kind_name(r.kind)
             << " a=" << r.a << " measured=" << r.iterations_measured
             << " predicted=" << r.iterations_predicted << " verdict=" << to_string(r.verdict)
             << " oracle=" << (r.oracle_agrees ? "agree" : "MISMATCH") << " branches=";
      for (std::size_t i = 0; i < r.branches.size(); ++i) {
        const auto& b = r.branches[i];
        io.out << (i ? "," : "") << b.a << ':' << to_string(b.outcome) << ':' << b.iterations;
      }
      if (r.branches.empty()) io.out << '-';
      if (opts.timing) io.out << " elapsed_ns=" << r.elapsed.count();
      io.out << " input=" << r.input << '\n';
    }
    std::ostringstream mad;
    mad << std::fixed << std::setprecision(4) << summary.mean_abs_deviation;
    io.out << "summary records=" << summary.records
           << " branches_compared=" << summary.branches_compared
           << " branches_within_one=" << summary.branches_within_one
           << " mean_abs_deviation=" << mad.str()
           << " oracle_mismatches=" << summary.oracle_mismatches << '\n';
  }
  return summary.oracle_mismatches == 0 ? kExitExact : kExitNotRoot;
}

}  // namespace u18::cli
