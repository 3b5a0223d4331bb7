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

// Layouts of the published coefficient tables. Each table fixes the outer
// indices and lays the remaining two out as a matrix. Labels are read
// outermost first, the reverse of MultiIndex order.

#ifndef ISI_TABLE_LAYOUTS_HPP_
#define ISI_TABLE_LAYOUTS_HPP_

#include <vector>

#include "isi/coefficients.hpp"

namespace isi {

struct TableLayout {
  unsigned number = 0;
  KernelSpec spec;
  std::vector<unsigned> prefix;  // fixed outer indices, outermost first
  unsigned extent = 0;           // rows = columns = extent
};

// Table numbers with a known layout, ascending.
std::vector<unsigned> coefficient_table_numbers();

// Throws std::out_of_range for an unknown table number.
TableLayout coefficient_table_layout(unsigned number);

// Multi-index (innermost first) of cell (row, col).
MultiIndex table_cell_index(const TableLayout& layout, unsigned row,
                            unsigned col);

// values[row][col], computed exactly.
std::vector<std::vector<Rational>> coefficient_table(const TableLayout& layout);

}  // namespace isi

#endif  // ISI_TABLE_LAYOUTS_HPP_
