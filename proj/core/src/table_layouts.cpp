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

#include "isi/table_layouts.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace isi {
namespace {

std::vector<TableLayout> all_layouts() {
  std::vector<TableLayout> out;
  auto add = [&](std::vector<unsigned> weights, std::vector<unsigned> prefix,
                 unsigned extent) {
    TableLayout t;
    t.number = static_cast<unsigned>(out.size()) + 4;
    t.spec = KernelSpec{std::move(weights)};
    t.prefix = std::move(prefix);
    t.extent = extent;
    out.push_back(std::move(t));
  };
  for (unsigned outer = 0; outer <= 6; ++outer) add({0, 0, 0}, {outer}, 7);
  const std::vector<std::vector<unsigned>> quad = {
      {0, 0}, {1, 0}, {0, 2}, {0, 1}, {1, 1}, {2, 0}, {2, 1}, {1, 2}, {2, 2}};
  for (const auto& p : quad) add({0, 0, 0, 0}, p, 3);
  // Weighted triples: weight on the outermost, innermost, middle variable.
  for (const auto& w : std::vector<std::vector<unsigned>>{
           {0, 0, 1}, {1, 0, 0}, {0, 1, 0}}) {
    for (unsigned outer = 0; outer <= 2; ++outer) add(w, {outer}, 3);
  }
  const std::vector<std::vector<unsigned>> quint = {
      {0, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 1, 1},
      {0, 0, 1}, {1, 0, 0}, {1, 0, 1}, {1, 1, 1}};
  for (const auto& p : quint) add({0, 0, 0, 0, 0}, p, 2);
  return out;
}

const std::vector<TableLayout>& layouts() {
  static const std::vector<TableLayout> kLayouts = all_layouts();
  return kLayouts;
}

}  // namespace

std::vector<unsigned> coefficient_table_numbers() {
  std::vector<unsigned> out;
  for (const auto& t : layouts()) out.push_back(t.number);
  return out;
}

TableLayout coefficient_table_layout(unsigned number) {
  for (const auto& t : layouts()) {
    if (t.number == number) return t;
  }
  throw std::out_of_range("no coefficient table " + std::to_string(number));
}

MultiIndex table_cell_index(const TableLayout& layout, unsigned row,
                            unsigned col) {
  MultiIndex label = layout.prefix;
  label.push_back(row);
  label.push_back(col);
  std::reverse(label.begin(), label.end());
  return label;
}

std::vector<std::vector<Rational>> coefficient_table(const TableLayout& layout) {
  // One tensor covers the whole table; its extent must reach the prefix.
  unsigned q = layout.extent - 1;
  for (unsigned p : layout.prefix) q = std::max(q, p);
  const CoeffTensor tensor = coeff_tensor(layout.spec, q);
  std::vector<std::vector<Rational>> out(layout.extent);
  for (unsigned r = 0; r < layout.extent; ++r) {
    for (unsigned c = 0; c < layout.extent; ++c) {
      out[r].push_back(tensor.at(table_cell_index(layout, r, c)));
    }
  }
  return out;
}

}  // namespace isi
