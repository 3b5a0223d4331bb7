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

// Text serialization of exact coefficient data. Schemas are documented in
// docs/formats.md. Output is byte-deterministic.

#ifndef ISI_TENSOR_IO_HPP_
#define ISI_TENSOR_IO_HPP_

#include <string>

#include "isi/coefficients.hpp"
#include "isi/table_layouts.hpp"

namespace isi {

// CSV: header "j1,...,jk,value,float", one row per entry, j1 fastest.
std::string tensor_to_csv(const CoeffTensor& tensor);

// JSON object with spec, q, convention and an "entries" array of
// {"j": [...], "num": "...", "den": "...", "float": x}.
std::string tensor_to_json(const CoeffTensor& tensor);

// Inverse of tensor_to_json. Throws std::invalid_argument on malformed input.
CoeffTensor tensor_from_json(const std::string& text);

// Matrix layouts for a published table. CSV header "row,c0,c1,..."; JSON
// carries the layout plus a "cells" matrix of {num, den, float}.
std::string table_to_csv(const TableLayout& layout,
                         const std::vector<std::vector<Rational>>& values);
std::string table_to_json(const TableLayout& layout,
                          const std::vector<std::vector<Rational>>& values);

// Shortest round-trip decimal form of a double ("%.17g" trimmed).
std::string format_double(double x);

}  // namespace isi

#endif  // ISI_TENSOR_IO_HPP_
