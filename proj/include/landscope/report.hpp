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

// Serialization of analysis results to JSON, CSV and markdown.
//
// JSON keys are sorted and reals use the shortest text that parses back to
// the same double, so JSON output round-trips exactly. CSV and markdown
// render reals with six significant digits. Nothing time-dependent is
// written, which keeps every emission a pure function of its input.

#pragma once

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <type_traits>
#include <variant>
#include <vector>

#include <json.hpp>

#include "landscope/dataset.hpp"
#include "landscope/error.hpp"
#include "landscope/landscape.hpp"
#include "landscope/rng.hpp"
#include "landscope/sensitivity.hpp"
#include "landscope/stats.hpp"
#include "landscope/tuners.hpp"

namespace landscope {

inline constexpr const char* kToolVersion = "0.1.0";

// ----------------------------------------------------------------------------
// Payloads not owned by other modules

struct ComparisonRow {
  std::string system;
  std::string workload;
  double mean_a = 0, std_a = 0;
  double mean_b = 0, std_b = 0;
  stats::Verdict verdict;

  friend bool operator==(const ComparisonRow&, const ComparisonRow&) = default;
};

struct ComparisonTable {
  std::string label_a;
  std::string label_b;
  std::string metric = "final_regret";
  std::vector<ComparisonRow> rows;

  friend bool operator==(const ComparisonTable&, const ComparisonTable&) = default;
};

struct AgreementReport {
  std::size_t items = 0;
  std::vector<std::string> llm_names;  // aligned with summary.per_llm_kappa
  stats::AgreementSummary summary;

  friend bool operator==(const AgreementReport&, const AgreementReport&) = default;
};

// "system/workload" key used in trajectory tables.
inline std::string workload_key(const std::string& system, const std::string& workload) {
  return system + "/" + workload;
}

inline std::pair<std::string, std::string> split_workload_key(const std::string& key) {
  const auto slash = key.find('/');
  if (slash == std::string::npos) return {"", key};
  return {key.substr(0, slash), key.substr(slash + 1)};
}

// Final regret of set A against set B per workload; "better" means A
// reaches lower regret. Workloads appear in sorted key order.
inline ComparisonTable compare_trajectories(const std::vector<Trajectory>& a, const std::vector<Trajectory>& b,
                                            std::string label_a, std::string label_b) {
  std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> groups;
  for (const auto& t : a) groups[workload_key(t.system, t.workload)].first.push_back(t.final_regret);
  for (const auto& t : b) groups[workload_key(t.system, t.workload)].second.push_back(t.final_regret);
  ComparisonTable table;
  table.label_a = std::move(label_a);
  table.label_b = std::move(label_b);
  for (const auto& [key, samples] : groups) {
    const auto& [xa, xb] = samples;
    if (xa.empty() || xb.empty()) throw DataError("workload '" + key + "' is missing from one trajectory set");
    ComparisonRow row;
    std::tie(row.system, row.workload) = split_workload_key(key);
    row.mean_a = stats::mean(xa);
    row.std_a = stats::sample_std(xa);
    row.mean_b = stats::mean(xb);
    row.std_b = stats::sample_std(xb);
    row.verdict = stats::verdict(xa, xb, stats::Orientation::lower_better);
    table.rows.push_back(std::move(row));
  }
  return table;
}

// ----------------------------------------------------------------------------
// Bundle

enum class BundleKind { landscape, sensitivity, trajectories, comparison, agreement };
enum class Format { json, csv, markdown };

inline std::string_view to_string(BundleKind k) {
  switch (k) {
    case BundleKind::landscape: return "landscape";
    case BundleKind::sensitivity: return "sensitivity";
    case BundleKind::trajectories: return "trajectories";
    case BundleKind::comparison: return "comparison";
    case BundleKind::agreement: return "agreement";
  }
  return "?";
}

inline std::string_view to_string(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::markdown: return "markdown";
  }
  return "?";
}

inline Format parse_format(std::string_view s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "markdown" || s == "md") return Format::markdown;
  throw InvalidArgument("unknown format '" + std::string(s) + "' (json, csv, markdown)");
}

struct DatasetIdentity {
  std::string path;
  std::string system;
  std::string workload;
  std::string content_hash;  // FNV-1a over CSV and metadata text

  friend bool operator==(const DatasetIdentity&, const DatasetIdentity&) = default;
};

inline std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline DatasetIdentity identify(const Dataset& ds, std::string path = {}) {
  return {std::move(path), ds.system(), ds.workload(), hex64(fnv1a(dataset_meta(ds), fnv1a(dataset_csv(ds))))};
}

struct Provenance {
  std::vector<DatasetIdentity> datasets;
  std::map<std::string, std::string> settings;
  std::uint64_t seed = 0;
  std::string tool_version = kToolVersion;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

using Payload = std::variant<std::vector<LandscapeReport>, SensitivityReport, std::vector<Trajectory>,
                             ComparisonTable, AgreementReport>;

struct ReportBundle {
  BundleKind kind = BundleKind::landscape;
  Payload payload;
  Provenance provenance;

  friend bool operator==(const ReportBundle&, const ReportBundle&) = default;
};

inline ReportBundle make_bundle(std::vector<LandscapeReport> p, Provenance prov = {}) {
  return {BundleKind::landscape, std::move(p), std::move(prov)};
}
inline ReportBundle make_bundle(SensitivityReport p, Provenance prov = {}) {
  return {BundleKind::sensitivity, std::move(p), std::move(prov)};
}
inline ReportBundle make_bundle(std::vector<Trajectory> p, Provenance prov = {}) {
  return {BundleKind::trajectories, std::move(p), std::move(prov)};
}
inline ReportBundle make_bundle(ComparisonTable p, Provenance prov = {}) {
  return {BundleKind::comparison, std::move(p), std::move(prov)};
}
inline ReportBundle make_bundle(AgreementReport p, Provenance prov = {}) {
  return {BundleKind::agreement, std::move(p), std::move(prov)};
}

// ----------------------------------------------------------------------------
// JSON

namespace detail {

using nlohmann::json;

template <class E, std::size_t N>
E parse_enum(const std::string& s, const E (&all)[N], const char* what) {
  for (E e : all) if (to_string(e) == s) return e;
  throw DataError(std::string("unknown ") + what + " '" + s + "'");
}

inline constexpr FdcTier kFdcTiers[] = {FdcTier::guided, FdcTier::irregular, FdcTier::deceptive};
inline constexpr QualityTier kQualityTiers[] = {QualityTier::high, QualityTier::medium, QualityTier::low};
inline constexpr RuggednessTier kRuggednessTiers[] = {RuggednessTier::smooth, RuggednessTier::moderate,
                                                      RuggednessTier::rugged};
inline constexpr QualityStatus kQualityStatuses[] = {QualityStatus::ok, QualityStatus::all_tied,
                                                     QualityStatus::no_optima};
inline constexpr BasinMode kBasinModes[] = {BasinMode::canonical, BasinMode::randomized};
inline constexpr stats::VerdictLabel kVerdictLabels[] = {stats::VerdictLabel::better, stats::VerdictLabel::similar,
                                                         stats::VerdictLabel::worse};
inline constexpr BundleKind kBundleKinds[] = {BundleKind::landscape, BundleKind::sensitivity,
                                              BundleKind::trajectories, BundleKind::comparison,
                                              BundleKind::agreement};

// Non-finite reals have no JSON literal; they travel as strings.
inline json real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

inline double real_from(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw DataError("not a number: '" + s + "'");
  }
  return j.get<double>();
}

template <class T, class F>
void put_opt(json& j, const char* key, const std::optional<T>& v, F&& conv) {
  j[key] = v ? conv(*v) : json(nullptr);
}

inline json opt_real(const std::optional<double>& v) { return v ? real(*v) : json(nullptr); }

inline std::optional<double> get_opt_real(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return real_from(j.at(key));
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

template <class E, std::size_t N>
std::optional<E> get_opt_enum(const json& j, const char* key, const E (&all)[N]) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return parse_enum(j.at(key).get<std::string>(), all, key);
}

inline json reals(const std::vector<double>& xs) {
  json a = json::array();
  for (double x : xs) a.push_back(real(x));
  return a;
}

inline std::vector<double> reals_from(const json& j) {
  std::vector<double> out;
  for (const auto& x : j) out.push_back(real_from(x));
  return out;
}

inline json to_json(const LandscapeReport& r) {
  json j;
  j["system"] = r.system;
  j["workload"] = r.workload;
  j["objective"] = std::string(to_string(r.objective));
  j["rows"] = r.rows;
  j["options"] = r.options;
  j["target_avg_degree"] = real(r.target_avg_degree);
  put_opt(j, "radius", r.radius, [](auto v) { return json(v); });
  j["average_degree"] = opt_real(r.average_degree);
  j["global_optimum"] = r.global_optimum;
  j["global_optimum_performance"] = real(r.global_optimum_performance);
  j["fdc"] = opt_real(r.fdc);
  put_opt(j, "fdc_tier", r.fdc_tier, [](auto v) { return json(std::string(to_string(v))); });
  put_opt(j, "local_optima_count", r.local_optima_count, [](auto v) { return json(v); });
  put_opt(j, "isolated_count", r.isolated_count, [](auto v) { return json(v); });
  j["local_optima_proportion"] = opt_real(r.local_optima_proportion);
  j["local_optima_quality"] = opt_real(r.local_optima_quality);
  j["quality_status"] = std::string(to_string(r.quality_status));
  put_opt(j, "quality_tier", r.quality_tier, [](auto v) { return json(std::string(to_string(v))); });
  json basins = json::object();
  for (const auto& [k, v] : r.basin_proportions) basins[k] = real(v);
  j["basin_proportions"] = basins;
  j["global_basin_proportion"] = opt_real(r.global_basin_proportion);
  put_opt(j, "global_basin_easy", r.global_basin_easy, [](auto v) { return json(v); });
  j["autocorrelation"] = opt_real(r.autocorrelation);
  put_opt(j, "ruggedness_tier", r.ruggedness_tier, [](auto v) { return json(std::string(to_string(v))); });
  j["walk_length"] = r.walk_length;
  j["lag"] = r.lag;
  j["walk_seed"] = r.walk_seed;
  j["basin_seed"] = r.basin_seed;
  j["basin_mode"] = std::string(to_string(r.basin_mode));
  j["errors"] = r.errors;
  return j;
}

inline LandscapeReport landscape_from_json(const json& j) {
  LandscapeReport r;
  r.system = j.at("system").get<std::string>();
  r.workload = j.at("workload").get<std::string>();
  r.objective = parse_objective(j.at("objective").get<std::string>());
  r.rows = j.at("rows").get<std::size_t>();
  r.options = j.at("options").get<std::size_t>();
  r.target_avg_degree = real_from(j.at("target_avg_degree"));
  r.radius = get_opt<std::size_t>(j, "radius");
  r.average_degree = get_opt_real(j, "average_degree");
  r.global_optimum = j.at("global_optimum").get<std::vector<std::string>>();
  r.global_optimum_performance = real_from(j.at("global_optimum_performance"));
  r.fdc = get_opt_real(j, "fdc");
  r.fdc_tier = get_opt_enum(j, "fdc_tier", kFdcTiers);
  r.local_optima_count = get_opt<std::size_t>(j, "local_optima_count");
  r.isolated_count = get_opt<std::size_t>(j, "isolated_count");
  r.local_optima_proportion = get_opt_real(j, "local_optima_proportion");
  r.local_optima_quality = get_opt_real(j, "local_optima_quality");
  r.quality_status = parse_enum(j.at("quality_status").get<std::string>(), kQualityStatuses, "quality status");
  r.quality_tier = get_opt_enum(j, "quality_tier", kQualityTiers);
  for (const auto& [k, v] : j.at("basin_proportions").items()) r.basin_proportions[k] = real_from(v);
  r.global_basin_proportion = get_opt_real(j, "global_basin_proportion");
  r.global_basin_easy = get_opt<bool>(j, "global_basin_easy");
  r.autocorrelation = get_opt_real(j, "autocorrelation");
  r.ruggedness_tier = get_opt_enum(j, "ruggedness_tier", kRuggednessTiers);
  r.walk_length = j.at("walk_length").get<std::size_t>();
  r.lag = j.at("lag").get<std::size_t>();
  r.walk_seed = j.at("walk_seed").get<std::uint64_t>();
  r.basin_seed = j.at("basin_seed").get<std::uint64_t>();
  r.basin_mode = parse_enum(j.at("basin_mode").get<std::string>(), kBasinModes, "basin mode");
  r.errors = j.at("errors").get<std::map<std::string, std::string>>();
  return r;
}

inline json to_json(const SensitivityRecord& r) {
  json skipped = json::array();
  for (const auto& s : r.skipped) skipped.push_back({{"value", s.value}, {"reason", s.reason}});
  return {{"option", r.option},
          {"taxonomy", std::string(to_string(r.taxonomy))},
          {"partition_values", r.partition_values},
          {"used_values", r.used_values},
          {"partition_autocorrelations", reals(r.partition_autocorrelations)},
          {"rsd_percent", opt_real(r.rsd)},
          {"significant", r.significant},
          {"unstable", r.unstable},
          {"skipped", skipped},
          {"error", r.error}};
}

inline SensitivityRecord sensitivity_record_from_json(const json& j) {
  SensitivityRecord r;
  r.option = j.at("option").get<std::string>();
  r.taxonomy = parse_taxonomy(j.at("taxonomy").get<std::string>());
  r.partition_values = j.at("partition_values").get<std::vector<std::string>>();
  r.used_values = j.at("used_values").get<std::vector<std::string>>();
  r.partition_autocorrelations = reals_from(j.at("partition_autocorrelations"));
  r.rsd = get_opt_real(j, "rsd_percent");
  r.significant = j.at("significant").get<bool>();
  r.unstable = j.at("unstable").get<bool>();
  for (const auto& s : j.at("skipped")) r.skipped.push_back({s.at("value").get<std::string>(), s.at("reason").get<std::string>()});
  r.error = j.at("error").get<std::string>();
  return r;
}

inline json to_json(const SensitivityReport& r) {
  json records = json::array();
  for (const auto& rec : r.records) records.push_back(to_json(rec));
  return {{"system", r.system},
          {"workloads", r.workloads},
          {"rsd_threshold", real(r.rsd_threshold)},
          {"min_subset_rows", r.min_subset_rows},
          {"seed", r.seed},
          {"median_aggregated", r.median_aggregated},
          {"significant_count", r.significant_count()},
          {"records", records}};
}

inline SensitivityReport sensitivity_from_json(const json& j) {
  SensitivityReport r;
  r.system = j.at("system").get<std::string>();
  r.workloads = j.at("workloads").get<std::vector<std::string>>();
  r.rsd_threshold = real_from(j.at("rsd_threshold"));
  r.min_subset_rows = j.at("min_subset_rows").get<std::size_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.median_aggregated = j.at("median_aggregated").get<bool>();
  for (const auto& rec : j.at("records")) r.records.push_back(sensitivity_record_from_json(rec));
  return r;
}

inline json to_json(const Trajectory& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"eval_index", s.eval_index},
                     {"row", s.row},
                     {"configuration", s.configuration},
                     {"performance", real(s.performance)},
                     {"best_so_far", real(s.best_so_far)},
                     {"regret", real(s.regret)}});
  }
  json j = {{"tuner", t.tuner},
            {"seed", t.seed},
            {"system", t.system},
            {"workload", t.workload},
            {"final_regret", real(t.final_regret)},
            {"steps", steps}};
  put_opt(j, "workload_position", t.workload_position, [](auto v) { return json(v); });
  j["mode"] = t.mode;
  return j;
}

inline Trajectory trajectory_from_json(const json& j) {
  Trajectory t;
  t.tuner = j.at("tuner").get<std::string>();
  t.seed = j.at("seed").get<std::uint64_t>();
  t.system = j.at("system").get<std::string>();
  t.workload = j.at("workload").get<std::string>();
  t.final_regret = real_from(j.at("final_regret"));
  t.workload_position = get_opt<std::size_t>(j, "workload_position");
  t.mode = j.at("mode").get<std::string>();
  for (const auto& s : j.at("steps")) {
    t.steps.push_back({s.at("eval_index").get<std::size_t>(), s.at("row").get<std::size_t>(),
                       s.at("configuration").get<std::string>(), real_from(s.at("performance")),
                       real_from(s.at("best_so_far")), real_from(s.at("regret"))});
  }
  return t;
}

inline json to_json(const ComparisonTable& c) {
  json rows = json::array();
  for (const auto& r : c.rows) {
    rows.push_back({{"system", r.system},
                    {"workload", r.workload},
                    {"mean_a", real(r.mean_a)},
                    {"std_a", real(r.std_a)},
                    {"mean_b", real(r.mean_b)},
                    {"std_b", real(r.std_b)},
                    {"p", real(r.verdict.p_value)},
                    {"a12", real(r.verdict.a12)},
                    {"label", std::string(to_string(r.verdict.label))}});
  }
  return {{"a", c.label_a}, {"b", c.label_b}, {"metric", c.metric}, {"rows", rows}};
}

inline ComparisonTable comparison_from_json(const json& j) {
  ComparisonTable c;
  c.label_a = j.at("a").get<std::string>();
  c.label_b = j.at("b").get<std::string>();
  c.metric = j.at("metric").get<std::string>();
  for (const auto& r : j.at("rows")) {
    ComparisonRow row;
    row.system = r.at("system").get<std::string>();
    row.workload = r.at("workload").get<std::string>();
    row.mean_a = real_from(r.at("mean_a"));
    row.std_a = real_from(r.at("std_a"));
    row.mean_b = real_from(r.at("mean_b"));
    row.std_b = real_from(r.at("std_b"));
    row.verdict.p_value = real_from(r.at("p"));
    row.verdict.a12 = real_from(r.at("a12"));
    row.verdict.label = parse_enum(r.at("label").get<std::string>(), kVerdictLabels, "verdict label");
    c.rows.push_back(std::move(row));
  }
  return c;
}

inline json to_json(const AgreementReport& a) {
  return {{"items", a.items},
          {"llm_names", a.llm_names},
          {"human_kappa", real(a.summary.human_kappa)},
          {"per_llm_kappa", reals(a.summary.per_llm_kappa)},
          {"overall", real(a.summary.overall)},
          {"reliable", a.summary.reliable}};
}

inline AgreementReport agreement_from_json(const json& j) {
  AgreementReport a;
  a.items = j.at("items").get<std::size_t>();
  a.llm_names = j.at("llm_names").get<std::vector<std::string>>();
  a.summary.human_kappa = real_from(j.at("human_kappa"));
  a.summary.per_llm_kappa = reals_from(j.at("per_llm_kappa"));
  a.summary.overall = real_from(j.at("overall"));
  a.summary.reliable = j.at("reliable").get<bool>();
  return a;
}

inline json to_json(const Provenance& p) {
  json ds = json::array();
  for (const auto& d : p.datasets) {
    ds.push_back({{"path", d.path}, {"system", d.system}, {"workload", d.workload}, {"content_hash", d.content_hash}});
  }
  return {{"datasets", ds}, {"settings", p.settings}, {"seed", p.seed}, {"tool_version", p.tool_version}};
}

inline Provenance provenance_from_json(const json& j) {
  Provenance p;
  for (const auto& d : j.at("datasets")) {
    p.datasets.push_back({d.at("path").get<std::string>(), d.at("system").get<std::string>(),
                          d.at("workload").get<std::string>(), d.at("content_hash").get<std::string>()});
  }
  p.settings = j.at("settings").get<std::map<std::string, std::string>>();
  p.seed = j.at("seed").get<std::uint64_t>();
  p.tool_version = j.at("tool_version").get<std::string>();
  return p;
}

}  // namespace detail

inline nlohmann::json to_json(const ReportBundle& b) {
  using detail::json;
  json payload = std::visit(
      [](const auto& p) -> json {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, std::vector<LandscapeReport>> || std::is_same_v<P, std::vector<Trajectory>>) {
          json a = json::array();
          for (const auto& x : p) a.push_back(detail::to_json(x));
          return a;
        } else {
          return detail::to_json(p);
        }
      },
      b.payload);
  return {{"kind", std::string(to_string(b.kind))}, {"payload", payload}, {"provenance", detail::to_json(b.provenance)}};
}

inline ReportBundle bundle_from_json(const nlohmann::json& j) {
  ReportBundle b;
  b.kind = detail::parse_enum(j.at("kind").get<std::string>(), detail::kBundleKinds, "bundle kind");
  b.provenance = detail::provenance_from_json(j.at("provenance"));
  const auto& p = j.at("payload");
  switch (b.kind) {
    case BundleKind::landscape: {
      std::vector<LandscapeReport> v;
      for (const auto& x : p) v.push_back(detail::landscape_from_json(x));
      b.payload = std::move(v);
      break;
    }
    case BundleKind::sensitivity: b.payload = detail::sensitivity_from_json(p); break;
    case BundleKind::trajectories: {
      std::vector<Trajectory> v;
      for (const auto& x : p) v.push_back(detail::trajectory_from_json(x));
      b.payload = std::move(v);
      break;
    }
    case BundleKind::comparison: b.payload = detail::comparison_from_json(p); break;
    case BundleKind::agreement: b.payload = detail::agreement_from_json(p); break;
  }
  return b;
}

inline ReportBundle parse_bundle(std::string_view text) {
  try {
    return bundle_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed report: ") + e.what());
  }
}

// ----------------------------------------------------------------------------
// CSV and markdown

namespace detail {

inline std::string g6(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

inline std::string g6(const std::optional<double>& v) { return v ? g6(*v) : ""; }

template <class T>
std::string text(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, bool>) return *v ? "true" : "false";
  else if constexpr (std::is_arithmetic_v<T>) return std::to_string(*v);
  else return std::string(to_string(*v));
}

inline std::string join(const std::vector<std::string>& xs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

inline std::string csv_row(const std::vector<std::string>& cells) {
  std::vector<std::string> esc;
  for (const auto& c : cells) esc.push_back(csv_escape(c));
  return join(esc, ",") + "\n";
}

inline std::string md_cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

inline std::string md_row(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const auto& c : cells) out += " " + md_cell(c) + " |";
  return out + "\n";
}

inline std::string md_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::string out = md_row(header);
  out += "|";
  for (std::size_t i = 0; i < header.size(); ++i) out += " --- |";
  out += "\n";
  for (const auto& r : rows) out += md_row(r);
  return out;
}

inline std::string errors_text(const std::map<std::string, std::string>& errors) {
  std::vector<std::string> parts;
  for (const auto& [k, v] : errors) parts.push_back(k + ": " + v);
  return join(parts, "; ");
}

inline const std::vector<std::string>& landscape_columns() {
  static const std::vector<std::string> cols = {
      "system", "workload", "rows", "options", "radius", "average_degree", "fdc", "fdc_tier",
      "local_optima", "isolated", "lp", "lq", "quality_tier", "global_basin_proportion", "global_basin_easy",
      "autocorrelation", "ruggedness_tier", "walk_length", "errors"};
  return cols;
}

inline std::vector<std::string> landscape_cells(const LandscapeReport& r) {
  return {r.system,
          r.workload,
          std::to_string(r.rows),
          std::to_string(r.options),
          text(r.radius),
          g6(r.average_degree),
          g6(r.fdc),
          text(r.fdc_tier),
          text(r.local_optima_count),
          text(r.isolated_count),
          g6(r.local_optima_proportion),
          g6(r.local_optima_quality),
          text(r.quality_tier),
          g6(r.global_basin_proportion),
          text(r.global_basin_easy),
          g6(r.autocorrelation),
          text(r.ruggedness_tier),
          std::to_string(r.walk_length),
          errors_text(r.errors)};
}

inline std::string rsd_text(const SensitivityRecord& r) {
  if (!r.error.empty()) return "insufficient";
  if (r.unstable) return "unstable";
  return g6(r.rsd);
}

inline std::string skipped_text(const SensitivityRecord& r) {
  std::vector<std::string> v;
  for (const auto& s : r.skipped) v.push_back(s.value);
  return join(v, ";");
}

inline bool dynamic_set(const std::vector<Trajectory>& ts) {
  for (const auto& t : ts) if (t.workload_position) return true;
  return false;
}

inline std::string landscape_csv(const std::vector<LandscapeReport>& reps) {
  std::string out = "# note: basin proportions and global optimum lists are omitted from csv; use json\n";
  out += csv_row(landscape_columns());
  for (const auto& r : reps) out += csv_row(landscape_cells(r));
  return out;
}

inline std::string landscape_md(const std::vector<LandscapeReport>& reps) {
  std::string out = "# Landscape analysis\n\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reps) {
    rows.push_back({r.system + "/" + r.workload, std::to_string(r.rows), text(r.radius), g6(r.fdc), text(r.fdc_tier),
                    g6(r.local_optima_proportion), g6(r.local_optima_quality), text(r.quality_tier),
                    g6(r.global_basin_proportion),
                    r.global_basin_easy ? (*r.global_basin_easy ? "easy" : "hard") : "", g6(r.autocorrelation),
                    text(r.ruggedness_tier)});
  }
  out += md_table({"workload", "rows", "radius", "fdc", "fdc tier", "lp", "lq", "lq tier", "global basin", "basin",
                   "r", "ruggedness"},
                  rows);
  for (const auto& r : reps) {
    if (r.errors.empty()) continue;
    out += "\n**" + md_cell(r.system + "/" + r.workload) + "**: " + md_cell(errors_text(r.errors)) + "\n";
  }
  return out;
}

inline std::string sensitivity_csv(const SensitivityReport& rep) {
  std::string out = "# note: per-partition autocorrelations are omitted from csv; use json\n";
  out += csv_row({"option", "taxonomy", "rsd_percent", "significant", "skipped"});
  for (const auto& r : rep.records) {
    out += csv_row({r.option, std::string(to_string(r.taxonomy)), rsd_text(r), r.significant ? "true" : "false",
                    skipped_text(r)});
  }
  return out;
}

inline std::string sensitivity_md(const SensitivityReport& rep) {
  std::string out = "# Option sensitivity: " + md_cell(rep.system) + "\n\n";
  out += "Workloads: " + md_cell(join(rep.workloads, ", ")) + ". Threshold: " + g6(rep.rsd_threshold) + "%. ";
  out += "Significant options: " + std::to_string(rep.significant_count()) + " of " +
         std::to_string(rep.records.size()) + ".\n\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : rep.records) {
    rows.push_back({r.option, std::string(to_string(r.taxonomy)), rsd_text(r), r.significant ? "significant" : "",
                    skipped_text(r)});
  }
  out += md_table({"option", "taxonomy", "rsd %", "flag", "skipped"}, rows);
  return out;
}

inline std::string trajectories_csv(const std::vector<Trajectory>& ts) {
  const bool dyn = dynamic_set(ts);
  std::vector<std::string> header = {"run_seed", "tuner", "workload", "eval_index", "configuration",
                                     "performance", "best_so_far", "regret"};
  if (dyn) {
    header.push_back("workload_position");
    header.push_back("mode");
  }
  std::string out = csv_row(header);
  for (const auto& t : ts) {
    for (const auto& s : t.steps) {
      std::vector<std::string> cells = {std::to_string(t.seed), t.tuner, workload_key(t.system, t.workload),
                                        std::to_string(s.eval_index), s.configuration, g6(s.performance),
                                        g6(s.best_so_far), g6(s.regret)};
      if (dyn) {
        cells.push_back(text(t.workload_position));
        cells.push_back(t.mode);
      }
      out += csv_row(cells);
    }
  }
  return out;
}

inline std::string trajectories_md(const std::vector<Trajectory>& ts) {
  // Summary per (tuner, workload): runs, median final regret, median
  // evaluations to zero regret.
  std::map<std::pair<std::string, std::string>, std::pair<std::vector<double>, std::vector<double>>> groups;
  for (const auto& t : ts) {
    auto& g = groups[{t.tuner, workload_key(t.system, t.workload)}];
    g.first.push_back(t.final_regret);
    const auto hit = t.evaluations_to_optimum();
    g.second.push_back(hit ? static_cast<double>(*hit) : static_cast<double>(t.steps.size() + 1));
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& [key, g] : groups) {
    rows.push_back({key.first, key.second, std::to_string(g.first.size()), g6(stats::median(g.first)),
                    g6(stats::mean(g.first)), g6(stats::median(g.second))});
  }
  return "# Tuner trajectories\n\n" +
         md_table({"tuner", "workload", "runs", "median final regret", "mean final regret",
                   "median evals to optimum"},
                  rows) +
         "\nPer-step trajectories are available in csv and json.\n";
}

inline std::string comparison_csv(const ComparisonTable& c) {
  std::string out = csv_row({"system", "workload", "mean_a", "std_a", "mean_b", "std_b", "p", "a12", "label"});
  for (const auto& r : c.rows) {
    out += csv_row({r.system, r.workload, g6(r.mean_a), g6(r.std_a), g6(r.mean_b), g6(r.std_b),
                    g6(r.verdict.p_value), g6(r.verdict.a12), std::string(to_string(r.verdict.label))});
  }
  return out;
}

inline std::string comparison_md(const ComparisonTable& c) {
  std::string out = "# " + md_cell(c.label_a) + " vs " + md_cell(c.label_b) + " (" + md_cell(c.metric) + ")\n\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : c.rows) {
    rows.push_back({r.system, r.workload, g6(r.mean_a) + " (" + g6(r.std_a) + ")",
                    g6(r.mean_b) + " (" + g6(r.std_b) + ")", g6(r.verdict.p_value), g6(r.verdict.a12),
                    std::string(to_string(r.verdict.label))});
  }
  out += md_table({"system", "workload", c.label_a, c.label_b, "p", "A12", "verdict"}, rows);
  return out;
}

inline std::string agreement_csv(const AgreementReport& a) {
  std::string out = csv_row({"rater", "kappa"});
  out += csv_row({"human", g6(a.summary.human_kappa)});
  for (std::size_t i = 0; i < a.summary.per_llm_kappa.size(); ++i) {
    out += csv_row({i < a.llm_names.size() ? a.llm_names[i] : "llm" + std::to_string(i + 1),
                    g6(a.summary.per_llm_kappa[i])});
  }
  out += csv_row({"overall", g6(a.summary.overall)});
  out += csv_row({"reliable", a.summary.reliable ? "true" : "false"});
  return out;
}

inline std::string agreement_md(const AgreementReport& a) {
  std::vector<std::vector<std::string>> rows = {{"human", g6(a.summary.human_kappa)}};
  for (std::size_t i = 0; i < a.summary.per_llm_kappa.size(); ++i) {
    rows.push_back({i < a.llm_names.size() ? a.llm_names[i] : "llm" + std::to_string(i + 1),
                    g6(a.summary.per_llm_kappa[i])});
  }
  rows.push_back({"overall", g6(a.summary.overall)});
  return "# Labeling agreement\n\n" + md_table({"rater", "kappa"}, rows) + "\n" + std::to_string(a.items) +
         " items; " + (a.summary.reliable ? "reliable" : "not reliable") + ".\n";
}

}  // namespace detail

// Pure rendering of a bundle.
inline std::string render(const ReportBundle& b, Format f) {
  if (f == Format::json) return to_json(b).dump(2) + "\n";
  return std::visit(
      [f](const auto& p) -> std::string {
        using P = std::decay_t<decltype(p)>;
        const bool csv = f == Format::csv;
        if constexpr (std::is_same_v<P, std::vector<LandscapeReport>>) {
          return csv ? detail::landscape_csv(p) : detail::landscape_md(p);
        } else if constexpr (std::is_same_v<P, SensitivityReport>) {
          return csv ? detail::sensitivity_csv(p) : detail::sensitivity_md(p);
        } else if constexpr (std::is_same_v<P, std::vector<Trajectory>>) {
          return csv ? detail::trajectories_csv(p) : detail::trajectories_md(p);
        } else if constexpr (std::is_same_v<P, ComparisonTable>) {
          return csv ? detail::comparison_csv(p) : detail::comparison_md(p);
        } else {
          return csv ? detail::agreement_csv(p) : detail::agreement_md(p);
        }
      },
      b.payload);
}

// Writes through a sibling temporary file and renames it into place.
inline void write_atomic(const std::string& path, std::string_view content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + path + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("cannot write '" + path + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error("cannot write '" + path + "'");
  }
}

inline void emit(const ReportBundle& b, Format f, const std::string& path) { write_atomic(path, render(b, f)); }

// ----------------------------------------------------------------------------
// Manifest

struct ManifestEntry {
  std::string path;
  std::string kind;
  std::string format;
  std::string content_hash;
  std::string provenance_hash;

  friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

inline ManifestEntry manifest_entry(const std::string& path, const ReportBundle& b, Format f, std::string_view content) {
  return {path, std::string(to_string(b.kind)), std::string(to_string(f)), hex64(fnv1a(content)),
          hex64(fnv1a(detail::to_json(b.provenance).dump()))};
}

inline std::string render_manifest(const std::vector<ManifestEntry>& entries) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& e : entries) {
    a.push_back({{"path", e.path},
                 {"kind", e.kind},
                 {"format", e.format},
                 {"content_hash", e.content_hash},
                 {"provenance_hash", e.provenance_hash}});
  }
  return nlohmann::json{{"tool_version", kToolVersion}, {"artifacts", a}}.dump(2) + "\n";
}

// ----------------------------------------------------------------------------
// Reading trajectory tables back

// Rebuilds trajectories from the CSV table. Row indices are not part of the
// table and come back as zero.
inline std::vector<Trajectory> parse_trajectories_csv(std::string_view text, const std::string& origin = "<memory>") {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    header = detail::split_csv_line(line);
    break;
  }
  auto col = [&](const std::string& name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < header.size(); ++i) if (header[i] == name) return i;
    return std::nullopt;
  };
  const char* required[] = {"run_seed", "tuner", "workload", "eval_index", "configuration",
                            "performance", "best_so_far", "regret"};
  std::size_t idx[8];
  for (std::size_t k = 0; k < 8; ++k) {
    auto c = col(required[k]);
    if (!c) throw DataError(origin + ": missing column '" + required[k] + "'");
    idx[k] = *c;
  }
  const auto pos_col = col("workload_position");
  const auto mode_col = col("mode");

  std::vector<Trajectory> out;
  std::map<std::tuple<std::string, std::string, std::string, std::string, std::string>, std::size_t> where;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto cells = detail::split_csv_line(line);
    if (cells.size() != header.size()) throw DataError(origin + ":" + std::to_string(line_no) + ": wrong field count");
    const std::string pos = pos_col ? cells[*pos_col] : "";
    const std::string mode = mode_col ? cells[*mode_col] : "";
    auto key = std::make_tuple(cells[idx[0]], cells[idx[1]], cells[idx[2]], pos, mode);
    auto it = where.find(key);
    if (it == where.end()) {
      Trajectory t;
      try {
        t.seed = std::stoull(cells[idx[0]]);
      } catch (const std::exception&) {
        throw DataError(origin + ":" + std::to_string(line_no) + ": bad run_seed");
      }
      t.tuner = cells[idx[1]];
      std::tie(t.system, t.workload) = split_workload_key(cells[idx[2]]);
      if (!pos.empty()) t.workload_position = std::stoull(pos);
      t.mode = mode;
      it = where.emplace(key, out.size()).first;
      out.push_back(std::move(t));
    }
    auto num = [&](std::size_t k) {
      auto v = detail::parse_double(cells[idx[k]]);
      if (!v) throw DataError(origin + ":" + std::to_string(line_no) + ": bad " + required[k]);
      return *v;
    };
    TrajectoryStep s;
    s.eval_index = static_cast<std::size_t>(num(3));
    s.configuration = cells[idx[4]];
    s.performance = num(5);
    s.best_so_far = num(6);
    s.regret = num(7);
    auto& t = out[it->second];
    t.steps.push_back(std::move(s));
    t.final_regret = t.steps.back().regret;
  }
  if (out.empty()) throw DataError(origin + ": no trajectory rows");
  return out;
}

}  // namespace landscope
