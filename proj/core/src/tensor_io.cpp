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

#include "isi/tensor_io.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace isi {
namespace {

using nlohmann::ordered_json;

ordered_json fraction_json(const Rational& r) {
  ordered_json j;
  j["num"] = r.get_num().get_str();
  j["den"] = r.get_den().get_str();
  j["float"] = to_double(r);
  return j;
}

const char* convention_name(Convention c) {
  return c == Convention::kSigned ? "signed" : "unsigned";
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string tensor_to_csv(const CoeffTensor& tensor) {
  std::ostringstream out;
  const unsigned k = tensor.spec().k();
  for (unsigned r = 1; r <= k; ++r) out << 'j' << r << ',';
  out << "value,float\n";
  for (std::size_t i = 0; i < tensor.size(); ++i) {
    for (unsigned jr : tensor.multi_index(i)) out << jr << ',';
    const Rational& v = tensor.at_linear(i);
    out << to_fraction_string(v) << ',' << format_double(to_double(v)) << '\n';
  }
  return out.str();
}

std::string tensor_to_json(const CoeffTensor& tensor) {
  ordered_json doc;
  doc["kind"] = "legendre-coefficients";
  doc["weights"] = tensor.spec().weights;
  doc["index_order"] = "innermost-first";
  doc["q"] = tensor.q();
  doc["convention"] = convention_name(tensor.convention());
  ordered_json entries = ordered_json::array();
  for (std::size_t i = 0; i < tensor.size(); ++i) {
    ordered_json e;
    e["j"] = tensor.multi_index(i);
    const ordered_json f = fraction_json(tensor.at_linear(i));
    for (const auto& [key, val] : f.items()) e[key] = val;
    entries.push_back(std::move(e));
  }
  doc["entries"] = std::move(entries);
  return doc.dump(1) + "\n";
}

CoeffTensor tensor_from_json(const std::string& text) {
  try {
    const auto doc = ordered_json::parse(text);
    KernelSpec spec{doc.at("weights").get<std::vector<unsigned>>()};
    spec.validate();
    const auto q = doc.at("q").get<unsigned>();
    const std::string conv = doc.at("convention").get<std::string>();
    const Convention convention =
        conv == "signed" ? Convention::kSigned : Convention::kUnsigned;
    std::size_t size = 1;
    for (unsigned r = 0; r < spec.k(); ++r) size *= q + 1;
    const auto& entries = doc.at("entries");
    if (entries.size() != size) {
      throw std::invalid_argument("entry count does not match (q+1)^k");
    }
    std::vector<Rational> values(size);
    CoeffTensor shape(spec, q, convention, {});
    for (const auto& e : entries) {
      const auto j = e.at("j").get<MultiIndex>();
      values[shape.linear_index(j)] = parse_fraction(
          e.at("num").get<std::string>() + "/" + e.at("den").get<std::string>());
    }
    return CoeffTensor(std::move(spec), q, convention, std::move(values));
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("malformed tensor JSON: ") +
                                ex.what());
  } catch (const std::out_of_range& ex) {
    throw std::invalid_argument(std::string("malformed tensor JSON: ") +
                                ex.what());
  }
}

std::string table_to_csv(const TableLayout& layout,
                         const std::vector<std::vector<Rational>>& values) {
  std::ostringstream out;
  out << "row";
  for (unsigned c = 0; c < layout.extent; ++c) out << ",c" << c;
  out << '\n';
  for (unsigned r = 0; r < values.size(); ++r) {
    out << r;
    for (const auto& v : values[r]) out << ',' << to_fraction_string(v);
    out << '\n';
  }
  return out.str();
}

std::string table_to_json(const TableLayout& layout,
                          const std::vector<std::vector<Rational>>& values) {
  ordered_json doc;
  doc["kind"] = "coefficient-table";
  doc["table"] = layout.number;
  doc["weights"] = layout.spec.weights;
  doc["prefix_outermost_first"] = layout.prefix;
  doc["extent"] = layout.extent;
  ordered_json cells = ordered_json::array();
  for (const auto& row : values) {
    ordered_json jr = ordered_json::array();
    for (const auto& v : row) jr.push_back(fraction_json(v));
    cells.push_back(std::move(jr));
  }
  doc["cells"] = std::move(cells);
  return doc.dump(1) + "\n";
}

}  // namespace isi
