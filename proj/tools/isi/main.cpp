// Copyright 2026 The isi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// isi: coefficient tables, truncation errors, minimal truncation orders and
// Monte Carlo validation from the command line.
//
// Exit status: 0 success, 1 usage, 2 validation failure, 3 resource cap.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "isi/commands.hpp"
#include "isi/errors.hpp"
#include "isi/manifest.hpp"
#include "isi/tensor_io.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kValidationFailed = 2;
constexpr int kResourceCap = 3;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::fwrite(content.data(), 1, content.size(), stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace isi::cli;

  CLI::App app{"Iterated stochastic integral expansions: exact coefficients, "
               "truncation errors and validation."};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", tool_version());

  std::string format = "csv";
  unsigned threads = 1;
  std::string output;
  std::string manifest_path;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", threads, "Worker threads")
      ->check(CLI::Range(1u, 256u));
  app.add_option("-o,--output", output, "Output file (default stdout)");
  app.add_option("--manifest", manifest_path,
                 "Write a run manifest with output checksums");

  RunManifest manifest;
  manifest.version = tool_version();
  auto param = [&](const std::string& k, const std::string& v) {
    manifest.parameters.emplace_back(k, v);
  };

  // coeffs
  CoeffsArgs coeffs;
  std::string convention = "signed";
  unsigned coeffs_k = 0;
  auto* c_cmd = app.add_subcommand("coeffs", "Exact Legendre coefficient tensors");
  auto* c_k = c_cmd->add_option("--k", coeffs_k, "Multiplicity, unweighted")
                  ->check(CLI::Range(1u, 5u));
  auto* c_w = c_cmd->add_option("--weights", coeffs.weights,
                                "Weight exponents, innermost first, e.g. 0,0,1");
  c_cmd->add_option("--q", coeffs.q, "Truncation order");
  auto* c_t = c_cmd->add_option("--paper-table", coeffs.table,
                                "Emit a published table layout by number");
  c_cmd->add_option("--convention", convention, "Sign convention")
      ->check(CLI::IsMember({"signed", "unsigned"}));
  c_cmd->add_option("--max-entries", coeffs.max_entries, "Tensor size cap");
  c_t->excludes(c_k)->excludes(c_w);

  // error-table
  ErrorTableArgs et;
  std::string et_q;
  unsigned et_k = 0;
  auto* e_cmd = app.add_subcommand("error-table", "Mean-square truncation errors");
  e_cmd->add_option("--table", et.table, "Published error table number");
  e_cmd->add_option("--kind", et.kind, "Series kind name, or 'exact'");
  e_cmd->add_option("--q", et_q, "Comma-separated truncation orders");
  e_cmd->add_option("--dt", et.dt, "Interval length")
      ->check(CLI::PositiveNumber);
  auto* e_k = e_cmd->add_option("--k", et_k, "Multiplicity for 'exact'")
                  ->check(CLI::Range(1u, 5u));
  e_cmd->add_option("--weights", et.weights, "Weights for 'exact'");
  e_cmd->add_option("--pattern", et.pattern,
                    "Equality pattern for 'exact': distinct:K, equal:K or 1,2,1");

  // q-table
  QTableArgs qt;
  std::string qt_tables;
  std::string qt_dt;
  auto* q_cmd = app.add_subcommand("q-table", "Minimal truncation orders");
  q_cmd->add_option("--table", qt_tables, "Comma-separated table numbers");
  q_cmd->add_option("--dt", qt_dt, "Comma-separated interval lengths");
  q_cmd->add_option("--cap", qt.cap, "Largest q to try");

  // validate
  ValidateArgs va;
  std::string va_cases;
  auto* v_cmd = app.add_subcommand("validate", "Monte Carlo validation");
  v_cmd->add_option("--cases", va_cases, "Comma-separated case names");
  v_cmd->add_option("--paths", va.paths, "Sample paths")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));
  v_cmd->add_option("--seed", va.seed, "Random seed");
  v_cmd->add_option("--steps", va.steps, "Fine grid steps");
  v_cmd->add_option("--max-steps", va.max_steps, "Grid refinement cap");
  v_cmd->add_option("--dt", va.dt, "Interval length")->check(CLI::PositiveNumber);
  v_cmd->add_option("--z-threshold", va.z_threshold, "Largest accepted |z|")
      ->check(CLI::NonNegativeNumber);

  // export
  ExportArgs ex;
  std::string ex_dir;
  auto* x_cmd = app.add_subcommand("export", "Write every table to a directory");
  x_cmd->add_option("--dir", ex_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Format fmt = parse_format(format);
    param("format", format);
    std::string content;
    int status = kOk;

    if (c_cmd->parsed()) {
      manifest.command = "coeffs";
      if (*c_k) coeffs.k = coeffs_k;
      coeffs.convention = convention == "signed" ? isi::Convention::kSigned
                                                 : isi::Convention::kUnsigned;
      coeffs.threads = threads;
      coeffs.format = fmt;
      if (coeffs.table) {
        param("paper-table", std::to_string(*coeffs.table));
      } else {
        if (coeffs.k) param("k", std::to_string(*coeffs.k));
        if (coeffs.weights) param("weights", *coeffs.weights);
        param("q", std::to_string(coeffs.q));
        param("convention", convention);
      }
      content = run_coeffs(coeffs);
    } else if (e_cmd->parsed()) {
      manifest.command = "error-table";
      if (*e_k) et.k = et_k;
      if (!et_q.empty()) et.qs = parse_unsigned_list(et_q);
      et.threads = threads;
      et.format = fmt;
      if (et.table) param("table", std::to_string(*et.table));
      if (et.kind) param("kind", *et.kind);
      if (!et_q.empty()) param("q", et_q);
      param("dt", isi::format_double(et.dt));
      if (et.k) param("k", std::to_string(*et.k));
      if (et.weights) param("weights", *et.weights);
      if (!et.pattern.empty()) param("pattern", et.pattern);
      content = run_error_table(et);
    } else if (q_cmd->parsed()) {
      manifest.command = "q-table";
      if (!qt_tables.empty()) qt.tables = parse_unsigned_list(qt_tables);
      if (!qt_dt.empty()) qt.dts = parse_double_list(qt_dt);
      qt.format = fmt;
      if (!qt_tables.empty()) param("table", qt_tables);
      if (!qt_dt.empty()) param("dt", qt_dt);
      param("cap", std::to_string(qt.cap));
      content = run_q_table(qt);
    } else if (v_cmd->parsed()) {
      manifest.command = "validate";
      if (!va_cases.empty()) {
        va.cases.clear();
        std::stringstream ss(va_cases);
        for (std::string item; std::getline(ss, item, ',');) {
          va.cases.push_back(item);
        }
      }
      va.threads = threads;
      // Reports default to JSON; --format csv switches to a flat table.
      va.format = app.get_option("--format")->count() ? fmt : Format::kJson;
      if (!va_cases.empty()) param("cases", va_cases);
      param("paths", std::to_string(va.paths));
      param("steps", std::to_string(va.steps));
      param("max-steps", std::to_string(va.max_steps));
      param("dt", isi::format_double(va.dt));
      param("z-threshold", isi::format_double(va.z_threshold));
      manifest.seed = va.seed;
      const ValidateResult r = run_validate(va);
      content = r.output;
      if (!r.all_passed) status = kValidationFailed;
    } else if (x_cmd->parsed()) {
      ex.dir = ex_dir;
      ex.threads = threads;
      const RunManifest m = run_export(ex);
      if (!manifest_path.empty()) write_output(manifest_path, m.to_json());
      return kOk;
    }

    write_output(output, content);
    manifest.add_output(output.empty() || output == "-" ? "stdout" : output,
                        content);
    if (!manifest_path.empty()) write_output(manifest_path, manifest.to_json());
    return status;
  } catch (const isi::ResourceLimitError& e) {
    std::cerr << "isi: resource limit: " << e.what() << '\n';
    return kResourceCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "isi: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "isi: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "isi: error: " << e.what() << '\n';
    return kUsage;
  }
}
