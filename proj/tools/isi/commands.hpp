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

// Subcommand bodies. Each returns its output bytes and leaves argument
// parsing, file writing and exit codes to the caller. Bad arguments raise
// std::invalid_argument or std::out_of_range; size caps raise
// ResourceLimitError.

#ifndef ISI_TOOLS_COMMANDS_HPP_
#define ISI_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "isi/coefficients.hpp"
#include "isi/manifest.hpp"

namespace isi::cli {

enum class Format { kCsv, kJson };

Format parse_format(const std::string& name);
std::string format_name(Format f);

// "0,0,1" to {0, 0, 1}.
std::vector<unsigned> parse_unsigned_list(const std::string& text);
std::vector<double> parse_double_list(const std::string& text);

// --weights wins over --k; one of them is required.
KernelSpec resolve_spec(const std::optional<unsigned>& k,
                        const std::optional<std::string>& weights);

struct CoeffsArgs {
  std::optional<unsigned> k;
  std::optional<std::string> weights;
  unsigned q = 2;
  std::optional<unsigned> table;
  Convention convention = Convention::kSigned;
  std::size_t max_entries = 10'000'000;
  unsigned threads = 1;
  Format format = Format::kCsv;
};
std::string run_coeffs(const CoeffsArgs& args);

struct ErrorTableArgs {
  std::optional<unsigned> table;
  std::optional<std::string> kind;  // series kind name, or "exact"
  std::vector<unsigned> qs;         // empty: the table's own list
  double dt = 1.0;
  std::optional<unsigned> k;        // exact kind only
  std::optional<std::string> weights;
  std::string pattern;              // exact kind only, e.g. "distinct:3"
  unsigned threads = 1;
  Format format = Format::kCsv;
};
std::string run_error_table(const ErrorTableArgs& args);

struct QTableArgs {
  std::vector<unsigned> tables;  // empty: all
  std::vector<double> dts;       // empty: each table's own columns
  unsigned cap = 1'000'000;
  Format format = Format::kCsv;
};
std::string run_q_table(const QTableArgs& args);

struct ValidateArgs {
  std::vector<std::string> cases;  // empty: the default set
  std::uint64_t paths = 100'000;
  std::uint64_t seed = 42;
  unsigned steps = 1u << 12;
  unsigned max_steps = 1u << 15;
  double dt = 0.5;
  double z_threshold = 3.0;  // a case passes when |z| <= threshold
  unsigned threads = 1;
  Format format = Format::kJson;
};
struct ValidateResult {
  std::string output;
  bool all_passed = true;
};
ValidateResult run_validate(const ValidateArgs& args);

struct ExportArgs {
  std::filesystem::path dir;
  unsigned threads = 1;
};
// Writes every coefficient, error and q table in both formats plus
// manifest.json. Returns the manifest.
RunManifest run_export(const ExportArgs& args);

std::string tool_version();

}  // namespace isi::cli

#endif  // ISI_TOOLS_COMMANDS_HPP_
