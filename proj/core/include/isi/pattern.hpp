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

#ifndef ISI_PATTERN_HPP_
#define ISI_PATTERN_HPP_

#include <string>
#include <utility>
#include <vector>

namespace isi {

enum class Calculus { kIto, kStratonovich };

// Wiener component labels (i_1..i_k), innermost integration first. Labels
// start at 1.
struct IndexPattern {
  std::vector<unsigned> components;

  unsigned k() const { return static_cast<unsigned>(components.size()); }
  unsigned max_component() const;
  // Throws std::invalid_argument on empty input or a zero label.
  void validate() const;
  // Pairs (a, b), a < b, of positions sharing a component.
  std::vector<std::pair<unsigned, unsigned>> equal_pairs() const;
};

// Partition of positions by shared component. group[r] numbers groups in
// order of first appearance, so equal partitions compare equal.
struct EqualityPattern {
  std::vector<unsigned> group;

  static EqualityPattern from(const IndexPattern& p);
  static EqualityPattern distinct(unsigned k);
  static EqualityPattern all_equal(unsigned k);
  // Parses "distinct:K", "equal:K" or a label list such as "1,2,1".
  static EqualityPattern parse(const std::string& text);

  unsigned k() const { return static_cast<unsigned>(group.size()); }
  // Every position permutation that maps each group onto itself, identity
  // first. Entry s[r] is the source position for position r.
  std::vector<std::vector<unsigned>> symmetries() const;
  std::string label() const;  // e.g. "1,2,1"

  friend bool operator==(const EqualityPattern&, const EqualityPattern&) =
      default;
};

}  // namespace isi

#endif  // ISI_PATTERN_HPP_
