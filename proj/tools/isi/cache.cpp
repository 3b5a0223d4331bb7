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

#include "isi/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include "isi/tensor_io.hpp"

namespace isi::cli {

namespace fs = std::filesystem;

std::optional<fs::path> cache_dir() {
  const char* env = std::getenv("ISI_CACHE_DIR");
  if (env == nullptr || *env == '\0') return std::nullopt;
  return fs::path(env);
}

fs::path cache_path(const fs::path& dir, const KernelSpec& spec, unsigned q,
                    Convention convention) {
  std::string name = "legendre-w";
  for (std::size_t r = 0; r < spec.weights.size(); ++r) {
    if (r) name += '-';
    name += std::to_string(spec.weights[r]);
  }
  name += "-q" + std::to_string(q);
  name += convention == Convention::kSigned ? "-signed" : "-unsigned";
  return dir / (name + ".json");
}

CoeffTensor cached_tensor(const KernelSpec& spec, unsigned q,
                          const TensorOptions& options) {
  const auto dir = cache_dir();
  if (!dir) return coeff_tensor(spec, q, options);
  const fs::path path = cache_path(*dir, spec, q, options.convention);
  if (std::ifstream in{path}) {
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      CoeffTensor t = tensor_from_json(buf.str());
      if (t.spec() == spec && t.q() == q &&
          t.convention() == options.convention) {
        return t;
      }
    } catch (const std::exception&) {
      // Fall through and rebuild a corrupt entry.
    }
  }
  CoeffTensor t = coeff_tensor(spec, q, options);
  std::error_code ec;
  fs::create_directories(*dir, ec);
  // Write beside the target, then rename, so readers never see a partial file.
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << tensor_to_json(t);
    if (!out) return t;  // an unwritable cache is not an error
  }
  fs::rename(tmp, path, ec);
  return t;
}

}  // namespace isi::cli
