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

#include "isi/pattern.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace isi {

unsigned IndexPattern::max_component() const {
  return components.empty()
             ? 0
             : *std::max_element(components.begin(), components.end());
}

void IndexPattern::validate() const {
  if (components.empty()) throw std::invalid_argument("empty index pattern");
  for (unsigned c : components) {
    if (c == 0) throw std::invalid_argument("component labels start at 1");
  }
}

std::vector<std::pair<unsigned, unsigned>> IndexPattern::equal_pairs() const {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned a = 0; a < k(); ++a) {
    for (unsigned b = a + 1; b < k(); ++b) {
      if (components[a] == components[b]) out.emplace_back(a, b);
    }
  }
  return out;
}

EqualityPattern EqualityPattern::from(const IndexPattern& p) {
  p.validate();
  std::map<unsigned, unsigned> ids;
  EqualityPattern e;
  for (unsigned c : p.components) {
    auto [it, inserted] = ids.emplace(c, static_cast<unsigned>(ids.size()));
    e.group.push_back(it->second);
  }
  return e;
}

EqualityPattern EqualityPattern::distinct(unsigned k) {
  EqualityPattern e;
  e.group.resize(k);
  std::iota(e.group.begin(), e.group.end(), 0u);
  return e;
}

EqualityPattern EqualityPattern::all_equal(unsigned k) {
  EqualityPattern e;
  e.group.assign(k, 0);
  return e;
}

EqualityPattern EqualityPattern::parse(const std::string& text) {
  if (text.rfind("distinct:", 0) == 0) {
    return distinct(static_cast<unsigned>(std::stoul(text.substr(9))));
  }
  if (text.rfind("equal:", 0) == 0) {
    return all_equal(static_cast<unsigned>(std::stoul(text.substr(6))));
  }
  IndexPattern p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const unsigned long v = std::stoul(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad pattern: " + text);
    p.components.push_back(static_cast<unsigned>(v));
  }
  return from(p);
}

std::vector<std::vector<unsigned>> EqualityPattern::symmetries() const {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> perm(k());
  std::iota(perm.begin(), perm.end(), 0u);
  // next_permutation from the identity enumerates all k! orders; keep those
  // that respect the groups. k <= 5, so at most 120 candidates.
  do {
    bool ok = true;
    for (unsigned r = 0; r < k() && ok; ++r) ok = group[perm[r]] == group[r];
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::string EqualityPattern::label() const {
  std::string s;
  for (unsigned r = 0; r < k(); ++r) {
    if (r) s += ',';
    s += std::to_string(group[r] + 1);
  }
  return s;
}

}  // namespace isi
