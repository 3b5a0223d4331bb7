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

#include "isi/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "isi/cache.hpp"
#include "isi/error.hpp"
#include "isi/mc_oracle.hpp"
#include "isi/table_layouts.hpp"
#include "isi/pattern.hpp"
#include "isi/qselect.hpp"
#include "isi/series.hpp"
#include "isi/tensor_io.hpp"
#include "json.hpp"

#ifndef ISI_VERSION_STRING
#define ISI_VERSION_STRING "0.0.0"
#endif

namespace isi::cli {
namespace {

using nlohmann::ordered_json;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

std::string dump(const ordered_json& doc) { return doc.dump(1) + "\n"; }

std::string join_dashes(const std::string& label) {
  std::string s = label;
  std::replace(s.begin(), s.end(), ',', '-');
  return s;
}

struct ErrorRow {
  unsigned q;
  double value;
  double normalized;
  std::optional<Rational> exact;
};

}  // namespace

std::string tool_version() { return ISI_VERSION_STRING; }

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  throw std::invalid_argument("unknown format '" + name + "'");
}

std::string format_name(Format f) { return f == Format::kCsv ? "csv" : "json"; }

std::vector<unsigned> parse_unsigned_list(const std::string& text) {
  std::vector<unsigned> out;
  for (const auto& item : split(text, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      if (item.empty() || item[0] == '-') throw std::invalid_argument(item);
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a non-negative integer: '" + item + "'");
    }
    if (used != item.size() || v > 0xffffffffUL) {
      throw std::invalid_argument("not a non-negative integer: '" + item + "'");
    }
    out.push_back(static_cast<unsigned>(v));
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a number: '" + item + "'");
    }
    if (used != item.size()) {
      throw std::invalid_argument("not a number: '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

KernelSpec resolve_spec(const std::optional<unsigned>& k,
                        const std::optional<std::string>& weights) {
  KernelSpec spec;
  if (weights) {
    spec.weights = parse_unsigned_list(*weights);
  } else if (k) {
    spec = KernelSpec::unweighted(*k);
  } else {
    throw std::invalid_argument("one of --k or --weights is required");
  }
  spec.validate();
  return spec;
}

std::string run_coeffs(const CoeffsArgs& args) {
  if (args.table) {
    const TableLayout layout = coefficient_table_layout(*args.table);
    const auto values = coefficient_table(layout);
    return args.format == Format::kCsv ? table_to_csv(layout, values)
                                       : table_to_json(layout, values);
  }
  const KernelSpec spec = resolve_spec(args.k, args.weights);
  TensorOptions options;
  options.max_entries = args.max_entries;
  options.threads = args.threads;
  options.convention = args.convention;
  const CoeffTensor t = cached_tensor(spec, args.q, options);
  return args.format == Format::kCsv ? tensor_to_csv(t) : tensor_to_json(t);
}

std::string run_error_table(const ErrorTableArgs& args) {
  if (!(args.dt > 0)) throw std::invalid_argument("dt must be positive");
  std::vector<ErrorRow> rows;
  std::string kind_label;
  std::optional<unsigned> table_number;
  double factor = 1;

  std::optional<SeriesKind> series;
  std::vector<unsigned> qs = args.qs;
  if (args.table) {
    const ErrorTable def = error_table(*args.table);
    table_number = def.number;
    series = def.kind;
    factor = def.factor;
    if (qs.empty()) qs = def.qs;
  } else if (!args.kind) {
    throw std::invalid_argument("one of --table or --kind is required");
  } else if (*args.kind != "exact") {
    series = parse_series_kind(*args.kind);
    if (!series) throw std::invalid_argument("unknown kind '" + *args.kind + "'");
  }
  if (qs.empty()) throw std::invalid_argument("--q is required");

  if (series) {
    kind_label = series_kind_name(*series);
    std::vector<unsigned> order(qs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](unsigned a, unsigned b) { return qs[a] < qs[b]; });
    rows.resize(qs.size());
    SeriesAccumulator acc(*series);
    const double scale = std::pow(args.dt, dt_exponent(*series));
    for (unsigned i : order) {
      acc.advance_to(qs[i]);
      const double n = acc.normalized();
      rows[i] = {qs[i], n * scale, factor * n, std::nullopt};
    }
  } else {
    const KernelSpec spec = resolve_spec(args.k, args.weights);
    if (args.pattern.empty()) {
      throw std::invalid_argument("kind 'exact' needs --pattern");
    }
    const EqualityPattern pattern = EqualityPattern::parse(args.pattern);
    if (pattern.k() != spec.k()) {
      throw std::invalid_argument("pattern length differs from multiplicity");
    }
    kind_label = "exact/" + join_dashes(spec.label()) + "/" +
                 join_dashes(pattern.label());
    const double scale =
        std::pow(args.dt, 2.0 * spec.weight_sum() + spec.k());
    TensorOptions options;
    options.threads = args.threads;
    for (unsigned q : qs) {
      const Rational unit =
          exact_error_unit(cached_tensor(spec, q, options), pattern);
      const double u = to_double(unit);
      rows.push_back({q, u * scale, u, unit});
    }
  }

  if (args.format == Format::kCsv) {
    std::ostringstream out;
    out << "kind,q,dt,value,normalized\n";
    for (const auto& r : rows) {
      out << kind_label << ',' << r.q << ',' << format_double(args.dt) << ','
          << format_double(r.value) << ',' << format_double(r.normalized)
          << '\n';
    }
    return out.str();
  }
  ordered_json doc;
  doc["kind"] = "error-table";
  doc["table"] = table_number ? ordered_json(*table_number) : ordered_json();
  doc["series"] = kind_label;
  doc["factor"] = factor;
  doc["dt"] = args.dt;
  ordered_json jr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json e;
    e["q"] = r.q;
    e["value"] = r.value;
    e["normalized"] = r.normalized;
    if (r.exact) {
      e["exact"] = {{"num", r.exact->get_num().get_str()},
                    {"den", r.exact->get_den().get_str()}};
    }
    jr.push_back(std::move(e));
  }
  doc["rows"] = std::move(jr);
  return dump(doc);
}

std::string run_q_table(const QTableArgs& args) {
  std::vector<QTable> tables;
  if (args.tables.empty()) {
    tables = q_tables();
  } else {
    for (unsigned n : args.tables) tables.push_back(q_table(n));
  }
  QSelectOptions options;
  options.cap = args.cap;

  struct Evaluated {
    QTableResult result;
    std::vector<double> ratio;  // pol / trig where both rows exist
  };
  std::vector<Evaluated> results;
  for (QTable t : tables) {
    if (!args.dts.empty()) t.dts = args.dts;
    Evaluated ev{evaluate(t, options), {}};
    const auto& rows = ev.result.table.rows;
    const auto pol = std::find(rows.begin(), rows.end(), ConditionId::kTab37Pol);
    const auto trig = std::find(rows.begin(), rows.end(), ConditionId::kTab37Trig);
    if (pol != rows.end() && trig != rows.end()) {
      const auto& qp = ev.result.q[pol - rows.begin()];
      const auto& qt = ev.result.q[trig - rows.begin()];
      for (std::size_t c = 0; c < qp.size(); ++c) {
        ev.ratio.push_back(static_cast<double>(qp[c]) / qt[c]);
      }
    }
    results.push_back(std::move(ev));
  }

  if (args.format == Format::kCsv) {
    std::ostringstream out;
    out << "table,row,dt,value\n";
    for (const auto& ev : results) {
      const auto& t = ev.result.table;
      for (std::size_t r = 0; r < t.rows.size(); ++r) {
        for (std::size_t c = 0; c < t.dts.size(); ++c) {
          out << t.number << ',' << condition_name(t.rows[r]) << ','
              << format_double(t.dts[c]) << ',' << ev.result.q[r][c] << '\n';
        }
      }
      for (std::size_t c = 0; c < ev.ratio.size(); ++c) {
        out << t.number << ",ratio_pol_trig," << format_double(t.dts[c]) << ','
            << format_double(ev.ratio[c]) << '\n';
      }
    }
    return out.str();
  }
  ordered_json doc;
  doc["kind"] = "q-tables";
  ordered_json arr = ordered_json::array();
  for (const auto& ev : results) {
    const auto& t = ev.result.table;
    ordered_json jt;
    jt["table"] = t.number;
    jt["dts"] = t.dts;
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      rows.push_back({{"condition", condition_name(t.rows[r])},
                      {"q", ev.result.q[r]}});
    }
    jt["rows"] = std::move(rows);
    if (!ev.ratio.empty()) jt["ratio_pol_trig"] = ev.ratio;
    arr.push_back(std::move(jt));
  }
  doc["tables"] = std::move(arr);
  return dump(doc);
}

ValidateResult run_validate(const ValidateArgs& args) {
  if (args.paths < 2) throw std::invalid_argument("--paths must be at least 2");
  if (!(args.z_threshold >= 0)) {
    throw std::invalid_argument("--z-threshold must be non-negative");
  }
  std::vector<ValidationCase> cases;
  const auto all = default_cases();
  if (args.cases.empty()) {
    cases = all;
  } else {
    for (const auto& name : args.cases) {
      auto it = std::find_if(all.begin(), all.end(),
                             [&](const ValidationCase& c) { return c.name == name; });
      if (it == all.end()) throw std::invalid_argument("unknown case '" + name + "'");
      cases.push_back(*it);
    }
  }
  SimConfig cfg;
  cfg.paths = args.paths;
  cfg.seed = args.seed;
  cfg.steps = args.steps;
  cfg.max_steps = args.max_steps;
  cfg.dt = args.dt;
  cfg.threads = args.threads;
  cfg.validate();

  ValidateResult result;
  std::vector<ValidationReport> reports;
  for (const auto& c : cases) {
    reports.push_back(validate_expansion(c, cfg));
    result.all_passed = result.all_passed && reports.back().passed(args.z_threshold);
  }
  if (args.format == Format::kJson) {
    result.output = reports_to_json(reports);
  } else {
    std::ostringstream out;
    out << "case,q,dt,N,P,empirical,theoretical,z\n";
    for (const auto& r : reports) {
      out << r.name << ',' << r.q << ',' << format_double(r.dt) << ','
          << r.steps << ',' << r.paths << ',' << format_double(r.empirical)
          << ',' << format_double(r.theoretical) << ',' << format_double(r.z)
          << '\n';
    }
    result.output = out.str();
  }
  return result;
}

RunManifest run_export(const ExportArgs& args) {
  namespace fs = std::filesystem;
  fs::create_directories(args.dir);
  RunManifest manifest;
  manifest.command = "export";
  manifest.version = tool_version();
  manifest.parameters.emplace_back("threads", std::to_string(args.threads));

  auto emit = [&](const std::string& name, const std::string& content) {
    std::ofstream out(args.dir / name, std::ios::binary);
    out << content;
    if (!out) throw std::runtime_error("cannot write " + (args.dir / name).string());
    manifest.add_output(name, content);
  };
  auto pad = [](unsigned n) {
    return n < 10 ? "0" + std::to_string(n) : std::to_string(n);
  };
  for (Format f : {Format::kCsv, Format::kJson}) {
    const std::string ext = "." + format_name(f);
    for (unsigned n : coefficient_table_numbers()) {
      CoeffsArgs a;
      a.table = n;
      a.threads = args.threads;
      a.format = f;
      emit("coefficient-table-" + pad(n) + ext, run_coeffs(a));
    }
    for (const auto& def : error_tables()) {
      ErrorTableArgs a;
      a.table = def.number;
      a.format = f;
      emit("error-table-" + pad(def.number) + ext, run_error_table(a));
    }
    QTableArgs a;
    a.format = f;
    emit("q-tables" + ext, run_q_table(a));
  }
  std::ofstream out(args.dir / "manifest.json", std::ios::binary);
  out << manifest.to_json();
  return manifest;
}

}  // namespace isi::cli
