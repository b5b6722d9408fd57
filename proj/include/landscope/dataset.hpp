// Copyright 2026 The Landscope Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Configuration-performance datasets: option metadata, measured rows, exact
// lookup and the best-observed configuration.
//
// On disk a dataset is two files. The data CSV has one column per option in
// canonical order followed by a `performance` column. The metadata file is a
// JSON object:
//
//   {
//     "system": "lrzip", "workload": "W1", "objective": "minimize",
//     "options": [
//       {"name": "level", "kind": "integer", "domain": [1, 5, 9],
//        "taxonomy": "R1"},
//       {"name": "mode", "kind": "enumerated"}
//     ]
//   }
//
// `domain` and `taxonomy` are optional; a missing domain is inferred from
// the column's distinct values.

#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "landscope/error.hpp"

namespace landscope {

enum class OptionKind { boolean, integer, real, enumerated };
enum class Taxonomy { core, utility, cpu, storage, memory, queue, unlabeled };
enum class Objective { minimize, maximize };

inline std::string_view to_string(OptionKind k) {
  switch (k) {
    case OptionKind::boolean: return "boolean";
    case OptionKind::integer: return "integer";
    case OptionKind::real: return "real";
    case OptionKind::enumerated: return "enumerated";
  }
  return "?";
}

// Taxonomy labels use the short codes of the option taxonomy:
// F1 core, F2 utility, R1 cpu, R2 storage, R3 memory, R4 queue.
inline std::string_view to_string(Taxonomy t) {
  switch (t) {
    case Taxonomy::core: return "F1";
    case Taxonomy::utility: return "F2";
    case Taxonomy::cpu: return "R1";
    case Taxonomy::storage: return "R2";
    case Taxonomy::memory: return "R3";
    case Taxonomy::queue: return "R4";
    case Taxonomy::unlabeled: return "unlabeled";
  }
  return "?";
}

inline std::string_view to_string(Objective o) {
  return o == Objective::minimize ? "minimize" : "maximize";
}

inline OptionKind parse_option_kind(std::string_view s) {
  if (s == "boolean" || s == "bool") return OptionKind::boolean;
  if (s == "integer" || s == "int") return OptionKind::integer;
  if (s == "real" || s == "float" || s == "double") return OptionKind::real;
  if (s == "enumerated" || s == "enum" || s == "categorical") return OptionKind::enumerated;
  throw DataError("unknown option kind '" + std::string(s) + "'");
}

inline Taxonomy parse_taxonomy(std::string_view s) {
  if (s == "F1" || s == "core") return Taxonomy::core;
  if (s == "F2" || s == "utility") return Taxonomy::utility;
  if (s == "R1" || s == "cpu") return Taxonomy::cpu;
  if (s == "R2" || s == "storage") return Taxonomy::storage;
  if (s == "R3" || s == "memory") return Taxonomy::memory;
  if (s == "R4" || s == "queue") return Taxonomy::queue;
  if (s == "unlabeled" || s.empty()) return Taxonomy::unlabeled;
  throw DataError("unknown taxonomy label '" + std::string(s) + "'");
}

inline Objective parse_objective(std::string_view s) {
  if (s == "minimize") return Objective::minimize;
  if (s == "maximize") return Objective::maximize;
  throw DataError("objective must be 'minimize' or 'maximize', got '" + std::string(s) + "'");
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::optional<double> parse_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

inline std::string format_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

// Splits one CSV record. Double-quoted fields may contain commas and "" escapes.
inline std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.emplace_back(trim(cur));
  return out;
}

inline std::string csv_escape(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

// One configurable option and its admissible values. Values are stored as
// canonical text labels; for numeric kinds the domain is sorted by value.
struct OptionSpec {
  std::string name;
  OptionKind kind = OptionKind::boolean;
  std::vector<std::string> domain;
  Taxonomy taxonomy = Taxonomy::unlabeled;

  bool is_numeric() const { return kind != OptionKind::enumerated; }

  std::optional<std::uint32_t> find(std::string_view label) const {
    auto it = std::find(domain.begin(), domain.end(), label);
    if (it == domain.end()) return std::nullopt;
    return static_cast<std::uint32_t>(it - domain.begin());
  }

  double numeric(std::size_t index) const {
    if (!is_numeric()) return static_cast<double>(index);
    return *detail::parse_double(domain.at(index));
  }

  friend bool operator==(const OptionSpec&, const OptionSpec&) = default;
};

// Canonical label of a raw cell for an option kind, or nullopt when the text
// cannot be parsed as that kind.
inline std::optional<std::string> canonical_label(OptionKind kind, std::string_view raw) {
  raw = detail::trim(raw);
  switch (kind) {
    case OptionKind::boolean: {
      if (raw == "0" || raw == "false" || raw == "False" || raw == "FALSE") return "0";
      if (raw == "1" || raw == "true" || raw == "True" || raw == "TRUE") return "1";
      return std::nullopt;
    }
    case OptionKind::integer: {
      std::string_view s = raw;
      if (!s.empty() && s.front() == '+') s.remove_prefix(1);
      long long v = 0;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
      return std::to_string(v);
    }
    case OptionKind::real: {
      auto v = detail::parse_double(raw);
      if (!v || !std::isfinite(*v)) return std::nullopt;
      return detail::format_double(*v);
    }
    case OptionKind::enumerated:
      if (raw.empty()) return std::nullopt;
      return std::string(raw);
  }
  return std::nullopt;
}

// Sorts numeric domains by value, leaves enumerated domains untouched.
inline void order_domain(OptionSpec& spec) {
  if (!spec.is_numeric()) return;
  std::stable_sort(spec.domain.begin(), spec.domain.end(), [](const std::string& a, const std::string& b) {
    return *detail::parse_double(a) < *detail::parse_double(b);
  });
}

// A configuration as value indices into each option's domain, in canonical
// option order.
struct Configuration {
  std::vector<std::uint32_t> values;

  Configuration() = default;
  explicit Configuration(std::vector<std::uint32_t> v) : values(std::move(v)) {}
  Configuration(std::initializer_list<std::uint32_t> v) : values(v) {}

  std::size_t size() const { return values.size(); }
  std::uint32_t operator[](std::size_t i) const { return values[i]; }
  std::uint32_t& operator[](std::size_t i) { return values[i]; }

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

struct ConfigurationHash {
  std::size_t operator()(const Configuration& c) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto v : c.values) {
      h ^= v;
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

struct Row {
  Configuration config;
  double performance = 0;

  friend bool operator==(const Row&, const Row&) = default;
};

// Immutable, validated table of measured configurations.
class Dataset {
 public:
  Dataset() = default;

  // Validates and indexes the rows. Exact duplicates (same configuration,
  // same performance) are collapsed keeping the first occurrence; a repeated
  // configuration with a different performance is rejected.
  static Dataset create(std::string system, std::string workload, Objective objective,
                        std::vector<OptionSpec> options, std::vector<Row> rows) {
    Dataset ds;
    ds.system_ = std::move(system);
    ds.workload_ = std::move(workload);
    ds.objective_ = objective;
    ds.options_ = std::move(options);
    if (ds.options_.empty()) throw DataError("dataset has no options");
    for (const auto& o : ds.options_) {
      if (o.domain.empty()) throw DataError("option '" + o.name + "' has an empty domain");
      std::vector<std::string> sorted = o.domain;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw DataError("option '" + o.name + "' has duplicate domain values");
      }
    }
    if (rows.empty()) throw DataError("empty dataset");
    ds.rows_.reserve(rows.size());
    for (auto& r : rows) {
      if (r.config.size() != ds.options_.size()) {
        throw DataError("configuration length does not match option count");
      }
      for (std::size_t i = 0; i < r.config.size(); ++i) {
        if (r.config[i] >= ds.options_[i].domain.size()) {
          throw DataError("value index out of domain for option '" + ds.options_[i].name + "'");
        }
      }
      if (!std::isfinite(r.performance)) throw DataError("non-finite performance");
      auto [it, fresh] = ds.index_.emplace(r.config, ds.rows_.size());
      if (!fresh) {
        if (ds.rows_[it->second].performance == r.performance) continue;
        throw DataError("conflicting duplicate for configuration (" + ds.render(r.config) + ")");
      }
      ds.rows_.push_back(std::move(r));
    }
    if (ds.rows_.size() < 2) throw DataError("dataset needs at least 2 distinct rows");
    return ds;
  }

  const std::string& system() const { return system_; }
  const std::string& workload() const { return workload_; }
  Objective objective() const { return objective_; }
  const std::vector<OptionSpec>& options() const { return options_; }
  const std::vector<Row>& rows() const { return rows_; }
  std::size_t dimension() const { return options_.size(); }
  std::size_t size() const { return rows_.size(); }
  const Configuration& config(std::size_t row) const { return rows_[row].config; }
  double performance(std::size_t row) const { return rows_[row].performance; }

  std::optional<std::size_t> find(const Configuration& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<std::size_t> option_index(std::string_view name) const {
    for (std::size_t i = 0; i < options_.size(); ++i) {
      if (options_[i].name == name) return i;
    }
    return std::nullopt;
  }

  // Strictly better under the objective.
  bool better(double a, double b) const {
    return objective_ == Objective::minimize ? a < b : a > b;
  }

  // Performance oriented so that lower is always better.
  double oriented(double performance) const {
    return objective_ == Objective::minimize ? performance : -performance;
  }

  std::vector<double> performances() const {
    std::vector<double> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.performance);
    return out;
  }

  double best_performance() const {
    double best = rows_.front().performance;
    for (const auto& r : rows_) if (better(r.performance, best)) best = r.performance;
    return best;
  }

  double worst_performance() const {
    double worst = rows_.front().performance;
    for (const auto& r : rows_) if (better(worst, r.performance)) worst = r.performance;
    return worst;
  }

  // Comma-joined option value labels.
  std::string render(const Configuration& c) const {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += i < options_.size() && c[i] < options_[i].domain.size() ? options_[i].domain[c[i]] : "?";
    }
    return out;
  }

  // Same option names, kinds and order.
  bool same_schema(const Dataset& other) const {
    if (options_.size() != other.options_.size()) return false;
    for (std::size_t i = 0; i < options_.size(); ++i) {
      if (options_[i].name != other.options_[i].name || options_[i].kind != other.options_[i].kind) return false;
    }
    return true;
  }

  friend bool operator==(const Dataset& a, const Dataset& b) {
    return a.system_ == b.system_ && a.workload_ == b.workload_ && a.objective_ == b.objective_ &&
           a.options_ == b.options_ && a.rows_ == b.rows_;
  }

 private:
  std::string system_;
  std::string workload_;
  Objective objective_ = Objective::minimize;
  std::vector<OptionSpec> options_;
  std::vector<Row> rows_;
  std::unordered_map<Configuration, std::size_t, ConfigurationHash> index_;
};

// Configurations attaining the best observed performance, used in place of
// the unknown true global optimum.
struct GlobalOptimumProxy {
  std::vector<std::size_t> rows;  // ascending row indices
  double performance = 0;

  bool contains(std::size_t row) const { return std::binary_search(rows.begin(), rows.end(), row); }
};

inline GlobalOptimumProxy best_configuration(const Dataset& ds) {
  GlobalOptimumProxy proxy;
  proxy.performance = ds.best_performance();
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (ds.performance(i) == proxy.performance) proxy.rows.push_back(i);
  }
  return proxy;
}

namespace detail {

inline std::string json_scalar_text(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return format_double(v.get<double>());
  throw DataError("domain values must be scalars");
}

}  // namespace detail

// Builds a dataset from in-memory CSV and metadata text.
inline Dataset parse_dataset(std::string_view csv_text, std::string_view meta_text,
                             std::string_view origin = "<memory>") {
  nlohmann::json meta;
  try {
    meta = nlohmann::json::parse(meta_text);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string(origin) + ": metadata is not valid JSON: " + e.what());
  }
  auto field = [&](const char* key) -> std::string {
    if (!meta.contains(key) || !meta[key].is_string()) {
      throw DataError(std::string(origin) + ": metadata lacks string field '" + key + "'");
    }
    return meta[key].get<std::string>();
  };
  const std::string system = field("system");
  const std::string workload = field("workload");
  const Objective objective = parse_objective(field("objective"));
  if (!meta.contains("options") || !meta["options"].is_array()) {
    throw DataError(std::string(origin) + ": metadata lacks an 'options' array");
  }

  struct Declared {
    OptionKind kind;
    std::optional<std::vector<std::string>> domain;
    Taxonomy taxonomy;
  };
  std::map<std::string, Declared> declared;
  for (const auto& o : meta["options"]) {
    if (!o.contains("name") || !o["name"].is_string()) throw DataError("option entry without a name");
    const auto name = o["name"].get<std::string>();
    Declared d{parse_option_kind(o.value("kind", std::string("enumerated"))), std::nullopt,
               parse_taxonomy(o.value("taxonomy", std::string("unlabeled")))};
    if (o.contains("domain")) {
      std::vector<std::string> dom;
      for (const auto& v : o["domain"]) {
        auto label = canonical_label(d.kind, detail::json_scalar_text(v));
        if (!label) throw DataError("option '" + name + "': unparsable domain value " + v.dump());
        dom.push_back(*label);
      }
      d.domain = std::move(dom);
    }
    if (!declared.emplace(name, std::move(d)).second) throw DataError("option '" + name + "' declared twice");
  }

  std::istringstream in{std::string(csv_text)};
  std::string line;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    if (!detail::trim(line).empty()) {
      header = detail::split_csv_line(line);
      break;
    }
  }
  if (header.empty()) throw DataError(std::string(origin) + ": empty dataset");
  if (header.back() != "performance") {
    throw DataError(std::string(origin) + ": missing column 'performance' (must be last)");
  }
  header.pop_back();
  for (const auto& h : header) {
    if (!declared.count(h)) throw DataError(std::string(origin) + ": column '" + h + "' not declared in metadata");
  }
  for (const auto& [name, d] : declared) {
    if (std::find(header.begin(), header.end(), name) == header.end()) {
      throw DataError(std::string(origin) + ": missing column '" + name + "'");
    }
  }

  const std::size_t n = header.size();
  std::vector<std::vector<std::string>> cells;
  std::vector<double> perf;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    auto fields = detail::split_csv_line(line);
    if (fields.size() != n + 1) {
      throw DataError(std::string(origin) + ":" + std::to_string(line_no) + ": expected " +
                      std::to_string(n + 1) + " fields, got " + std::to_string(fields.size()));
    }
    auto p = detail::parse_double(fields.back());
    if (!p) throw DataError(std::string(origin) + ":" + std::to_string(line_no) + ": unparsable performance '" + fields.back() + "'");
    if (!std::isfinite(*p)) throw DataError(std::string(origin) + ":" + std::to_string(line_no) + ": non-finite performance");
    fields.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      auto label = canonical_label(declared.at(header[j]).kind, fields[j]);
      if (!label) {
        throw DataError(std::string(origin) + ":" + std::to_string(line_no) + ": unparsable value '" + fields[j] +
                        "' for option '" + header[j] + "'");
      }
      fields[j] = *label;
    }
    cells.push_back(std::move(fields));
    perf.push_back(*p);
  }
  if (cells.empty()) throw DataError(std::string(origin) + ": empty dataset");

  std::vector<OptionSpec> options;
  for (std::size_t j = 0; j < n; ++j) {
    const auto& d = declared.at(header[j]);
    OptionSpec spec{header[j], d.kind, {}, d.taxonomy};
    if (d.domain) {
      spec.domain = *d.domain;
      order_domain(spec);
    } else {
      std::vector<std::string> seen;
      for (const auto& row : cells) seen.push_back(row[j]);
      std::sort(seen.begin(), seen.end());
      seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
      spec.domain = std::move(seen);
      order_domain(spec);
    }
    options.push_back(std::move(spec));
  }

  std::vector<Row> rows;
  rows.reserve(cells.size());
  for (std::size_t r = 0; r < cells.size(); ++r) {
    Configuration c;
    c.values.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      auto idx = options[j].find(cells[r][j]);
      if (!idx) {
        throw DataError(std::string(origin) + ": value '" + cells[r][j] + "' of option '" + options[j].name +
                        "' is not in its declared domain");
      }
      c[j] = *idx;
    }
    rows.push_back({std::move(c), perf[r]});
  }
  return Dataset::create(system, workload, objective, std::move(options), std::move(rows));
}

inline Dataset load_dataset(const std::string& data_path, const std::string& meta_path) {
  return parse_dataset(detail::read_file(data_path), detail::read_file(meta_path), data_path);
}

// "runs/x.csv" pairs with "runs/x.meta.json".
inline std::string default_meta_path(const std::string& data_path) {
  std::filesystem::path p(data_path);
  p.replace_extension(".meta.json");
  return p.string();
}

inline Dataset load_dataset(const std::string& data_path) { return load_dataset(data_path, default_meta_path(data_path)); }

inline std::string dataset_csv(const Dataset& ds) {
  std::string out;
  for (const auto& o : ds.options()) out += detail::csv_escape(o.name) + ',';
  out += "performance\n";
  for (const auto& r : ds.rows()) {
    for (std::size_t j = 0; j < r.config.size(); ++j) out += detail::csv_escape(ds.options()[j].domain[r.config[j]]) + ',';
    out += detail::format_double(r.performance) + '\n';
  }
  return out;
}

inline std::string dataset_meta(const Dataset& ds) {
  nlohmann::json meta;
  meta["system"] = ds.system();
  meta["workload"] = ds.workload();
  meta["objective"] = std::string(to_string(ds.objective()));
  meta["options"] = nlohmann::json::array();
  for (const auto& o : ds.options()) {
    meta["options"].push_back({{"name", o.name},
                               {"kind", std::string(to_string(o.kind))},
                               {"domain", o.domain},
                               {"taxonomy", std::string(to_string(o.taxonomy))}});
  }
  return meta.dump(2) + '\n';
}

inline void save_dataset(const Dataset& ds, const std::string& data_path, const std::string& meta_path) {
  std::ofstream csv(data_path, std::ios::binary);
  std::ofstream meta(meta_path, std::ios::binary);
  if (!csv || !meta) throw DataError("cannot write dataset to '" + data_path + "'");
  csv << dataset_csv(ds);
  meta << dataset_meta(ds);
}

}  // namespace landscope
