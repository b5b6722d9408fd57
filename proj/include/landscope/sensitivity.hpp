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

// Option-level ruggedness sensitivity.
//
// For each option the dataset is split into one subset per option value,
// the random-walk autocorrelation is measured inside every subset, and the
// relative standard deviation of those autocorrelations says how strongly the
// option reshapes ruggedness.

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "landscope/dataset.hpp"
#include "landscope/landscape.hpp"
#include "landscope/rng.hpp"
#include "landscope/stats.hpp"

namespace landscope {

struct SensitivitySettings {
  std::size_t min_subset_rows = 8;
  double rsd_threshold = 5.0;  // percent
  // Split many-valued numeric options into low/high halves about the median
  // instead of one subset per value.
  bool bin_numeric = false;
  std::uint64_t seed = 0;
  NeighborhoodSettings neighborhood;  // applied to each subset independently
  std::size_t lag = 1;
};

struct Partition {
  std::string value;  // option value label, or bin label
  std::size_t rows = 0;
  std::optional<Dataset> subset;  // absent when too small to form a dataset
  bool skipped = false;
  std::string reason;
};

inline std::string subset_too_small(std::size_t rows, std::size_t min_rows) {
  return "insufficient rows (" + std::to_string(rows) + " < " + std::to_string(min_rows) + ")";
}

// One subset per value of `option`, each holding the option fixed. Per-value
// subsets drop the option from the configuration; binned subsets keep it.
inline std::vector<Partition> partition_by_option(const Dataset& ds, const std::string& option,
                                                  const SensitivitySettings& settings = {}) {
  auto col = ds.option_index(option);
  if (!col) throw DataError("unknown option '" + option + "'");
  const OptionSpec& spec = ds.options()[*col];

  std::vector<std::uint32_t> present;
  for (const auto& r : ds.rows()) present.push_back(r.config[*col]);
  std::sort(present.begin(), present.end());
  present.erase(std::unique(present.begin(), present.end()), present.end());
  if (present.size() < 2) throw DataError("nothing to partition: option '" + option + "' is constant");

  std::vector<Partition> out;
  const bool binned = settings.bin_numeric && spec.is_numeric() && present.size() > 2;
  if (binned) {
    std::vector<double> values;
    for (const auto& r : ds.rows()) values.push_back(spec.numeric(r.config[*col]));
    const double cut = stats::median(values);
    for (int half = 0; half < 2; ++half) {
      Partition p;
      p.value = (half == 0 ? "<=" : ">") + detail::format_double(cut);
      std::vector<Row> rows;
      for (const auto& r : ds.rows()) {
        const bool low = spec.numeric(r.config[*col]) <= cut;
        if (low == (half == 0)) rows.push_back(r);
      }
      p.rows = rows.size();
      if (rows.size() >= 2) {
        p.subset = Dataset::create(ds.system(), ds.workload() + "[" + option + p.value + "]", ds.objective(),
                                   ds.options(), std::move(rows));
      }
      out.push_back(std::move(p));
    }
  } else {
    std::vector<OptionSpec> rest = ds.options();
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(*col));
    if (rest.empty()) throw DataError("nothing to partition: '" + option + "' is the only option");
    for (auto v : present) {
      Partition p;
      p.value = spec.domain[v];
      std::vector<Row> rows;
      for (const auto& r : ds.rows()) {
        if (r.config[*col] != v) continue;
        Configuration c = r.config;
        c.values.erase(c.values.begin() + static_cast<std::ptrdiff_t>(*col));
        rows.push_back({std::move(c), r.performance});
      }
      p.rows = rows.size();
      if (rows.size() >= 2) {
        p.subset = Dataset::create(ds.system(), ds.workload() + "[" + option + "=" + p.value + "]", ds.objective(),
                                   rest, std::move(rows));
      }
      out.push_back(std::move(p));
    }
  }
  for (auto& p : out) {
    if (p.rows < settings.min_subset_rows || !p.subset) {
      p.skipped = true;
      p.reason = subset_too_small(p.rows, settings.min_subset_rows);
    }
  }
  return out;
}

struct SkippedPartition {
  std::string value;
  std::string reason;

  friend bool operator==(const SkippedPartition&, const SkippedPartition&) = default;
};

struct SensitivityRecord {
  std::string option;
  Taxonomy taxonomy = Taxonomy::unlabeled;
  std::vector<std::string> partition_values;      // every subset, in domain order
  std::vector<std::string> used_values;           // subsets that produced an autocorrelation
  std::vector<double> partition_autocorrelations;  // aligned with used_values
  std::optional<double> rsd;                       // percent; absent when unstable or insufficient
  bool significant = false;
  bool unstable = false;  // |mean autocorrelation| too close to zero for a ratio
  std::vector<SkippedPartition> skipped;
  std::string error;  // non-empty when fewer than two subsets were usable

  friend bool operator==(const SensitivityRecord&, const SensitivityRecord&) = default;
};

inline constexpr double kUnstableMean = 1e-6;

struct RsdResult {
  std::optional<double> percent;
  bool unstable = false;
};

// 100 * sample std / |mean|.
inline RsdResult relative_std_percent(std::span<const double> xs) {
  const double m = stats::mean(xs);
  if (std::abs(m) < kUnstableMean) return {std::nullopt, true};
  return {100.0 * stats::sample_std(xs) / std::abs(m), false};
}

namespace detail {

struct PartitionOutcome {
  std::string value;
  std::optional<double> r;
  std::string reason;
};

// Every subset walks with the same seed, so structurally identical subsets
// produce identical walks.
inline std::vector<PartitionOutcome> partition_autocorrelations(const Dataset& ds, const std::string& option,
                                                                const SensitivitySettings& settings) {
  std::vector<PartitionOutcome> out;
  const std::uint64_t walk_seed = derive_seed(settings.seed, "sensitivity-walk", 0);
  for (auto& p : partition_by_option(ds, option, settings)) {
    PartitionOutcome o{p.value, std::nullopt, p.reason};
    if (!p.skipped) {
      try {
        const auto graph = build_neighborhood_best_effort(*p.subset, settings.neighborhood);
        const auto walk = random_walk(graph, walk_seed);
        o.r = autocorrelation(walk, *p.subset, settings.lag);
      } catch (const UndefinedMetric& e) {
        o.reason = e.what();
      }
    }
    out.push_back(std::move(o));
  }
  return out;
}

inline void finish_record(SensitivityRecord& rec, const SensitivitySettings& settings) {
  if (rec.partition_autocorrelations.size() < 2) {
    rec.error = "insufficient partitions (" + std::to_string(rec.partition_autocorrelations.size()) + " usable)";
    return;
  }
  auto rsd = relative_std_percent(rec.partition_autocorrelations);
  rec.rsd = rsd.percent;
  rec.unstable = rsd.unstable;
  rec.significant = rsd.percent && *rsd.percent >= settings.rsd_threshold;
}

}  // namespace detail

// Throws UndefinedMetric("insufficient partitions") when fewer than two
// subsets yield an autocorrelation.
inline SensitivityRecord option_sensitivity(const Dataset& ds, const std::string& option,
                                            const SensitivitySettings& settings = {}) {
  auto col = ds.option_index(option);
  if (!col) throw DataError("unknown option '" + option + "'");
  SensitivityRecord rec;
  rec.option = option;
  rec.taxonomy = ds.options()[*col].taxonomy;
  for (auto& o : detail::partition_autocorrelations(ds, option, settings)) {
    rec.partition_values.push_back(o.value);
    if (o.r) {
      rec.used_values.push_back(o.value);
      rec.partition_autocorrelations.push_back(*o.r);
    } else {
      rec.skipped.push_back({o.value, o.reason});
    }
  }
  detail::finish_record(rec, settings);
  if (!rec.error.empty()) throw UndefinedMetric(rec.error + " for option '" + option + "'");
  return rec;
}

struct SensitivityReport {
  std::string system;
  std::vector<std::string> workloads;
  double rsd_threshold = 5.0;
  std::size_t min_subset_rows = 8;
  std::uint64_t seed = 0;
  bool median_aggregated = false;  // true when more than one workload
  std::vector<SensitivityRecord> records;

  std::size_t significant_count() const {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return r.significant; }));
  }

  friend bool operator==(const SensitivityReport&, const SensitivityReport&) = default;
};

// Per option, subset autocorrelations are medianed across workloads before
// the RSD is taken. Options with too few usable subsets get a record with
// `error` set instead of failing the report.
inline SensitivityReport sensitivity_report(const std::vector<Dataset>& datasets,
                                            const SensitivitySettings& settings = {}) {
  if (datasets.empty()) throw InvalidArgument("sensitivity_report: no datasets");
  const Dataset& first = datasets.front();
  for (const auto& ds : datasets) {
    if (!ds.same_schema(first)) {
      throw DataError("schema mismatch between workloads '" + first.workload() + "' and '" + ds.workload() + "'");
    }
  }
  SensitivityReport rep;
  rep.system = first.system();
  for (const auto& ds : datasets) rep.workloads.push_back(ds.workload());
  rep.rsd_threshold = settings.rsd_threshold;
  rep.min_subset_rows = settings.min_subset_rows;
  rep.seed = settings.seed;
  rep.median_aggregated = datasets.size() > 1;

  for (const auto& opt : first.options()) {
    std::vector<std::vector<detail::PartitionOutcome>> per_workload;
    for (const auto& ds : datasets) per_workload.push_back(detail::partition_autocorrelations(ds, opt.name, settings));

    std::vector<std::string> values;
    for (const auto& w : per_workload) {
      for (const auto& o : w) {
        if (std::find(values.begin(), values.end(), o.value) == values.end()) values.push_back(o.value);
      }
    }
    if (!settings.bin_numeric || !opt.is_numeric()) {
      std::stable_sort(values.begin(), values.end(), [&](const std::string& a, const std::string& b) {
        return opt.find(a).value_or(0) < opt.find(b).value_or(0);
      });
    }

    SensitivityRecord rec;
    rec.option = opt.name;
    rec.taxonomy = opt.taxonomy;
    for (const auto& v : values) {
      rec.partition_values.push_back(v);
      std::vector<double> rs;
      std::string reason;
      for (const auto& w : per_workload) {
        for (const auto& o : w) {
          if (o.value != v) continue;
          if (o.r) rs.push_back(*o.r);
          else if (reason.empty()) reason = o.reason;
        }
      }
      if (rs.empty()) {
        rec.skipped.push_back({v, reason.empty() ? "value absent" : reason});
      } else {
        rec.used_values.push_back(v);
        rec.partition_autocorrelations.push_back(stats::median(rs));
      }
    }
    detail::finish_record(rec, settings);
    rep.records.push_back(std::move(rec));
  }
  return rep;
}

}  // namespace landscope
