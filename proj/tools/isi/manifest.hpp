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

// Run manifests: what was asked for and checksums of what came out.

#ifndef ISI_TOOLS_MANIFEST_HPP_
#define ISI_TOOLS_MANIFEST_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace isi::cli {

// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(const std::string& bytes);

struct OutputRecord {
  std::string name;  // file name, or "stdout"
  std::size_t bytes = 0;
  std::string sha256;
};

struct RunManifest {
  std::string command;
  // In insertion order, values already rendered as strings.
  std::vector<std::pair<std::string, std::string>> parameters;
  std::optional<std::uint64_t> seed;
  std::string version;
  std::vector<OutputRecord> outputs;

  void add_output(const std::string& name, const std::string& content);
  std::string to_json() const;
  // Throws std::invalid_argument on malformed input.
  static RunManifest from_json(const std::string& text);

  friend bool operator==(const RunManifest&, const RunManifest&);
};

}  // namespace isi::cli

#endif  // ISI_TOOLS_MANIFEST_HPP_
