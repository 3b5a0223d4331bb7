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

// On-disk cache of exact coefficient tensors, enabled by ISI_CACHE_DIR.
// A missing, unreadable or mismatched entry is recomputed and rewritten.

#ifndef ISI_TOOLS_CACHE_HPP_
#define ISI_TOOLS_CACHE_HPP_

#include <filesystem>
#include <optional>

#include "isi/coefficients.hpp"

namespace isi::cli {

// Directory named by ISI_CACHE_DIR, if set and non-empty.
std::optional<std::filesystem::path> cache_dir();

std::filesystem::path cache_path(const std::filesystem::path& dir,
                                 const KernelSpec& spec, unsigned q,
                                 Convention convention);

CoeffTensor cached_tensor(const KernelSpec& spec, unsigned q,
                          const TensorOptions& options);

}  // namespace isi::cli

#endif  // ISI_TOOLS_CACHE_HPP_
