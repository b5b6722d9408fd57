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

// The landscope command line. `run` is the whole program minus process
// setup, so it can be driven in-process.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 undefined metric
// under --strict.

#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "landscope/dataset.hpp"
#include "landscope/error.hpp"
#include "landscope/landscape.hpp"
#include "landscope/parallel.hpp"
#include "landscope/report.hpp"
#include "landscope/rng.hpp"
#include "landscope/sensitivity.hpp"
#include "landscope/stats.hpp"
#include "landscope/tuners.hpp"

namespace landscope::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitUndefined = 3;

struct CommonOptions {
  std::vector<std::string> datasets;
  std::vector<std::string> metas;
  std::string out;
  std::string format;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  bool strict = false;
};

struct Artifact {
  std::string path;  // empty: standard output
  ReportBundle bundle;
  Format format;
};

namespace detail {

inline void add_common(CLI::App* cmd, CommonOptions& o, bool with_datasets = true) {
  if (with_datasets) {
    cmd->add_option("--dataset", o.datasets, "Dataset CSV (repeatable)")->required();
    cmd->add_option("--meta", o.metas,
                    "Metadata JSON, paired with --dataset by position (default: <dataset stem>.meta.json)");
  }
  cmd->add_option("--out", o.out, "Output file; standard output when absent");
  cmd->add_option("--format", o.format, "json, csv or markdown (default: from --out extension, else json)")
      ->check(CLI::IsMember({"json", "csv", "markdown", "md"}));
  cmd->add_option("--seed", o.seed, "Base seed")->envname("LANDSCOPE_SEED")->capture_default_str();
  cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_flag("--strict", o.strict, "Exit 3 when a metric is undefined");
}

inline std::vector<Dataset> load_all(const CommonOptions& o) {
  if (!o.metas.empty() && o.metas.size() != o.datasets.size()) {
    throw InvalidArgument("--meta given " + std::to_string(o.metas.size()) + " times for " +
                          std::to_string(o.datasets.size()) + " --dataset values");
  }
  std::vector<Dataset> out;
  for (std::size_t i = 0; i < o.datasets.size(); ++i) {
    const std::string meta = o.metas.empty() ? default_meta_path(o.datasets[i]) : o.metas[i];
    out.push_back(load_dataset(o.datasets[i], meta));
  }
  return out;
}

inline Provenance provenance_of(const CommonOptions& o, const std::vector<Dataset>& ds,
                                std::map<std::string, std::string> settings) {
  Provenance p;
  for (std::size_t i = 0; i < ds.size(); ++i) p.datasets.push_back(identify(ds[i], o.datasets[i]));
  p.settings = std::move(settings);
  p.seed = o.seed;
  return p;
}

inline Format resolve_format(const CommonOptions& o) {
  if (!o.format.empty()) return parse_format(o.format);
  const auto ext = std::filesystem::path(o.out).extension().string();
  if (ext == ".csv") return Format::csv;
  if (ext == ".md" || ext == ".markdown") return Format::markdown;
  return Format::json;
}

inline std::string extension(Format f) {
  switch (f) {
    case Format::json: return ".json";
    case Format::csv: return ".csv";
    case Format::markdown: return ".md";
  }
  return "";
}

// Writes every artifact, then a manifest next to the first file output.
inline void publish(const std::vector<Artifact>& artifacts, std::ostream& out) {
  std::vector<ManifestEntry> entries;
  for (const auto& a : artifacts) {
    const std::string text = render(a.bundle, a.format);
    if (a.path.empty()) {
      out << text;
      continue;
    }
    write_atomic(a.path, text);
    entries.push_back(manifest_entry(a.path, a.bundle, a.format, text));
  }
  if (!entries.empty()) write_atomic(entries.front().path + ".manifest.json", render_manifest(entries));
}

inline std::string fmt(double v) { return landscope::detail::format_double(v); }

inline std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& s : items) {
    std::size_t start = 0;
    while (start <= s.size()) {
      auto comma = s.find(',', start);
      if (comma == std::string::npos) comma = s.size();
      auto piece = std::string(landscope::detail::trim(std::string_view(s).substr(start, comma - start)));
      if (!piece.empty()) out.push_back(piece);
      start = comma + 1;
    }
  }
  return out;
}

// Options flagged by a sensitivity analysis over all datasets.
inline std::vector<std::string> sensitive_options(const std::vector<Dataset>& ds, std::uint64_t seed,
                                                  double rsd_threshold) {
  SensitivitySettings s;
  s.seed = seed;
  s.rsd_threshold = rsd_threshold;
  const auto rep = sensitivity_report(ds, s);
  std::vector<std::string> out;
  for (const auto& r : rep.records) if (r.significant) out.push_back(r.option);
  if (out.empty()) throw DataError("no sensitive options found; pass --priority-options");
  return out;
}

struct LabelFile {
  std::vector<std::string> options;
  std::map<std::string, std::string> labels;
};

inline LabelFile load_labels(const std::string& path) {
  const std::string text = landscope::detail::read_file(path);
  std::istringstream in(text);
  std::string line;
  LabelFile f;
  std::optional<std::size_t> opt_col, label_col;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto cells = landscope::detail::split_csv_line(line);
    if (!opt_col) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i] == "option") opt_col = i;
        if (cells[i] == "label") label_col = i;
      }
      if (!opt_col || !label_col) throw DataError(path + ": header must contain 'option' and 'label'");
      continue;
    }
    if (cells.size() <= std::max(*opt_col, *label_col)) throw DataError(path + ":" + std::to_string(line_no) + ": missing field");
    const auto& name = cells[*opt_col];
    if (f.labels.count(name)) throw DataError(path + ": option '" + name + "' labeled twice");
    f.options.push_back(name);
    f.labels[name] = std::string(landscope::detail::trim(cells[*label_col]));
  }
  if (f.options.empty()) throw DataError(path + ": no labels");
  return f;
}

inline std::vector<std::string> aligned(const LabelFile& f, const std::vector<std::string>& order,
                                        const std::string& path) {
  if (f.labels.size() != order.size()) throw DataError(path + ": labels a different option set");
  std::vector<std::string> out;
  for (const auto& o : order) {
    auto it = f.labels.find(o);
    if (it == f.labels.end()) throw DataError(path + ": option '" + o + "' is not labeled");
    out.push_back(it->second);
  }
  return out;
}

inline std::vector<Trajectory> filter_tuner(std::vector<Trajectory> ts, const std::string& tuner) {
  if (tuner.empty()) return ts;
  std::vector<Trajectory> out;
  for (auto& t : ts) if (t.tuner == tuner) out.push_back(std::move(t));
  if (out.empty()) throw DataError("no trajectories for tuner '" + tuner + "'");
  return out;
}

inline std::string tuner_names(const std::vector<Trajectory>& ts) {
  std::vector<std::string> names;
  for (const auto& t : ts) {
    if (std::find(names.begin(), names.end(), t.tuner) == names.end()) names.push_back(t.tuner);
  }
  return landscope::detail::join(names, "+");
}

}  // namespace detail

// ----------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Fitness landscape analysis and tuning on measured configuration datasets", "landscope"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  // analyze
  CommonOptions ao;
  std::optional<double> a_target;
  std::optional<std::size_t> a_max_radius;
  double a_basin_threshold = kEasyBasinThreshold;
  std::string a_basin_mode = "canonical";
  std::size_t a_lag = 1;
  auto* analyze_cmd = app.add_subcommand("analyze", "Landscape metrics for each dataset");
  detail::add_common(analyze_cmd, ao);
  analyze_cmd->add_option("--avg-degree-target", a_target,
                          "Target average neighborhood degree (default: n, the number of options)");
  analyze_cmd->add_option("--max-radius", a_max_radius, "Largest Hamming radius tried (default: n)");
  analyze_cmd->add_option("--basin-threshold", a_basin_threshold, "Global basin share above which search is easy")
      ->capture_default_str();
  analyze_cmd->add_option("--basin-mode", a_basin_mode, "canonical or randomized neighbor order")
      ->check(CLI::IsMember({"canonical", "randomized"}))
      ->capture_default_str();
  analyze_cmd->add_option("--lag", a_lag, "Autocorrelation lag")->check(CLI::PositiveNumber)->capture_default_str();

  // sensitivity
  CommonOptions so;
  double s_rsd = 5.0;
  std::size_t s_min_rows = 8;
  bool s_bin = false;
  std::optional<double> s_target;
  auto* sensitivity_cmd = app.add_subcommand("sensitivity", "Per-option ruggedness sensitivity across workloads");
  detail::add_common(sensitivity_cmd, so);
  sensitivity_cmd->add_option("--rsd-threshold", s_rsd, "Significance threshold on RSD (percent)")
      ->capture_default_str();
  sensitivity_cmd->add_option("--min-subset-rows", s_min_rows, "Smallest subset analysed")->capture_default_str();
  sensitivity_cmd->add_flag("--bin-numeric", s_bin, "Split many-valued numeric options at the median");
  sensitivity_cmd->add_option("--avg-degree-target", s_target,
                              "Target average degree within each subset (default: subset n)");

  // tune
  CommonOptions to;
  std::vector<std::string> t_tuners, t_priority;
  std::size_t t_budget = 80, t_repeats = 30, t_population = 20;
  std::string t_regret = "normalized";
  double t_rsd = 5.0;
  auto* tune_cmd = app.add_subcommand("tune", "Run tuners against the datasets");
  detail::add_common(tune_cmd, to);
  tune_cmd->add_option("--tuner", t_tuners, "rs, hc, priority-hc, ga, priority-ga or tpe (repeatable)")
      ->required()
      ->check(CLI::IsMember({"rs", "hc", "priority-hc", "ga", "priority-ga", "tpe"}));
  tune_cmd->add_option("--budget", t_budget, "Measurements per run")->check(CLI::PositiveNumber)->capture_default_str();
  tune_cmd->add_option("--repeats", t_repeats, "Runs per tuner and dataset")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  tune_cmd->add_option("--priority-options", t_priority,
                       "Options favoured by priority tuners, comma separated (default: options flagged by "
                       "sensitivity analysis)");
  tune_cmd->add_option("--rsd-threshold", t_rsd, "Threshold used when priority options are derived")
      ->capture_default_str();
  tune_cmd->add_option("--population", t_population, "GA population size")->capture_default_str();
  tune_cmd->add_option("--regret", t_regret, "normalized or raw")
      ->check(CLI::IsMember({"normalized", "raw"}))
      ->capture_default_str();

  // compare
  CommonOptions co;
  std::string c_a, c_b, c_tuner_a, c_tuner_b, c_label_a, c_label_b;
  auto* compare_cmd = app.add_subcommand("compare", "Verdict table between two trajectory sets (final regret)");
  detail::add_common(compare_cmd, co, false);
  compare_cmd->add_option("--a", c_a, "Trajectory CSV for set A")->required()->check(CLI::ExistingFile);
  compare_cmd->add_option("--b", c_b, "Trajectory CSV for set B")->required()->check(CLI::ExistingFile);
  compare_cmd->add_option("--tuner-a", c_tuner_a, "Keep only this tuner from set A");
  compare_cmd->add_option("--tuner-b", c_tuner_b, "Keep only this tuner from set B");
  compare_cmd->add_option("--label-a", c_label_a, "Column label for set A (default: its tuner names)");
  compare_cmd->add_option("--label-b", c_label_b, "Column label for set B (default: its tuner names)");

  // dynamic
  CommonOptions dyo;
  std::string d_mode = "both", d_tuner = "ga";
  std::vector<std::string> d_priority;
  std::size_t d_budget = 80, d_repeats = 30, d_population = 20;
  double d_rsd = 5.0;
  auto* dynamic_cmd = app.add_subcommand("dynamic", "Transfer versus restarted GA over shuffled workloads");
  detail::add_common(dynamic_cmd, dyo);
  dynamic_cmd->add_option("--mode", d_mode, "restart, transfer or both")
      ->check(CLI::IsMember({"restart", "transfer", "both"}))
      ->capture_default_str();
  dynamic_cmd->add_option("--tuner", d_tuner, "ga or priority-ga")
      ->check(CLI::IsMember({"ga", "priority-ga"}))
      ->capture_default_str();
  dynamic_cmd->add_option("--budget", d_budget, "Measurements per workload")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  dynamic_cmd->add_option("--repeats", d_repeats, "Runs per mode")->check(CLI::PositiveNumber)->capture_default_str();
  dynamic_cmd->add_option("--priority-options", d_priority, "Options favoured by priority-ga, comma separated");
  dynamic_cmd->add_option("--rsd-threshold", d_rsd, "Threshold used when priority options are derived")
      ->capture_default_str();
  dynamic_cmd->add_option("--population", d_population, "GA population size")->capture_default_str();

  // agreement
  CommonOptions go;
  std::vector<std::string> g_humans, g_llms, g_llm_names;
  std::string g_consensus;
  auto* agreement_cmd = app.add_subcommand("agreement", "Cohen's kappa summary from option,label CSV files");
  detail::add_common(agreement_cmd, go, false);
  agreement_cmd->add_option("--human", g_humans, "Human label file (exactly two)")
      ->required()
      ->check(CLI::ExistingFile);
  agreement_cmd->add_option("--consensus", g_consensus, "Human consensus labels (default: first --human file)")
      ->check(CLI::ExistingFile);
  agreement_cmd->add_option("--llm", g_llms, "Model label file (repeatable)")->check(CLI::ExistingFile);
  agreement_cmd->add_option("--llm-name", g_llm_names, "Display names for --llm files, by position");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  bool strict = false;
  try {
    std::vector<Artifact> artifacts;
    bool degenerate = false;

    if (*analyze_cmd) {
      strict = ao.strict;
      const auto ds = detail::load_all(ao);
      AnalysisSettings s;
      s.neighborhood.target_avg_degree = a_target;
      s.neighborhood.max_radius = a_max_radius;
      s.walk_seed = ao.seed;
      s.basin_seed = ao.seed;
      s.basin_mode = a_basin_mode == "canonical" ? BasinMode::canonical : BasinMode::randomized;
      s.lag = a_lag;
      auto reports = parallel_map(ds.size(), ao.jobs, [&](std::size_t i) {
        auto r = analyze(ds[i], s);
        if (r.global_basin_proportion) r.global_basin_easy = *r.global_basin_proportion > a_basin_threshold;
        return r;
      });
      for (const auto& r : reports) degenerate = degenerate || !r.errors.empty();
      std::map<std::string, std::string> settings = {{"command", "analyze"},
                                                     {"basin_threshold", detail::fmt(a_basin_threshold)},
                                                     {"basin_mode", a_basin_mode},
                                                     {"lag", std::to_string(a_lag)}};
      settings["avg_degree_target"] = a_target ? detail::fmt(*a_target) : "n";
      settings["max_radius"] = a_max_radius ? std::to_string(*a_max_radius) : "n";
      artifacts.push_back({ao.out, make_bundle(std::move(reports), detail::provenance_of(ao, ds, settings)),
                           detail::resolve_format(ao)});
    } else if (*sensitivity_cmd) {
      strict = so.strict;
      const auto ds = detail::load_all(so);
      SensitivitySettings s;
      s.rsd_threshold = s_rsd;
      s.min_subset_rows = s_min_rows;
      s.bin_numeric = s_bin;
      s.seed = so.seed;
      s.neighborhood.target_avg_degree = s_target;
      auto rep = sensitivity_report(ds, s);
      for (const auto& r : rep.records) degenerate = degenerate || !r.error.empty() || r.unstable;
      std::map<std::string, std::string> settings = {{"command", "sensitivity"},
                                                     {"rsd_threshold", detail::fmt(s_rsd)},
                                                     {"min_subset_rows", std::to_string(s_min_rows)},
                                                     {"bin_numeric", s_bin ? "true" : "false"}};
      settings["avg_degree_target"] = s_target ? detail::fmt(*s_target) : "n";
      artifacts.push_back(
          {so.out, make_bundle(std::move(rep), detail::provenance_of(so, ds, settings)), detail::resolve_format(so)});
    } else if (*tune_cmd) {
      strict = to.strict;
      const auto ds = detail::load_all(to);
      auto priority = detail::split_list(t_priority);
      std::vector<TunerSpec> specs;
      for (const auto& name : t_tuners) {
        auto spec = TunerSpec::parse(name);
        spec.ga.population_size = t_population;
        if (spec.prioritized) {
          if (priority.empty()) priority = detail::sensitive_options(ds, to.seed, t_rsd);
          spec.priority = priority;
        }
        spec.validate();
        specs.push_back(std::move(spec));
      }
      struct Job {
        std::size_t dataset, spec, repeat;
      };
      std::vector<Job> jobs;
      for (std::size_t d = 0; d < ds.size(); ++d) {
        for (std::size_t t = 0; t < specs.size(); ++t) {
          for (std::size_t k = 0; k < t_repeats; ++k) jobs.push_back({d, t, k});
        }
      }
      const RegretMode mode = t_regret == "raw" ? RegretMode::raw : RegretMode::normalized;
      auto trajectories = parallel_map(jobs.size(), to.jobs, [&](std::size_t i) {
        const auto& j = jobs[i];
        const auto& spec = specs[j.spec];
        return run_tuner(spec, ds[j.dataset], t_budget, derive_seed(to.seed, spec.name(), j.repeat), mode);
      });
      std::map<std::string, std::string> settings = {{"command", "tune"},
                                                     {"tuners", landscope::detail::join(t_tuners, ",")},
                                                     {"budget", std::to_string(t_budget)},
                                                     {"repeats", std::to_string(t_repeats)},
                                                     {"population", std::to_string(t_population)},
                                                     {"regret", t_regret},
                                                     {"priority_options", landscope::detail::join(priority, ",")}};
      artifacts.push_back({to.out, make_bundle(std::move(trajectories), detail::provenance_of(to, ds, settings)),
                           detail::resolve_format(to)});
    } else if (*compare_cmd) {
      strict = co.strict;
      auto a = detail::filter_tuner(parse_trajectories_csv(landscope::detail::read_file(c_a), c_a), c_tuner_a);
      auto b = detail::filter_tuner(parse_trajectories_csv(landscope::detail::read_file(c_b), c_b), c_tuner_b);
      const std::string la = c_label_a.empty() ? detail::tuner_names(a) : c_label_a;
      const std::string lb = c_label_b.empty() ? detail::tuner_names(b) : c_label_b;
      auto table = compare_trajectories(a, b, la, lb);
      Provenance p;
      p.seed = co.seed;
      p.settings = {{"command", "compare"}, {"a", c_a}, {"b", c_b}, {"tuner_a", c_tuner_a}, {"tuner_b", c_tuner_b}};
      artifacts.push_back({co.out, make_bundle(std::move(table), std::move(p)), detail::resolve_format(co)});
    } else if (*dynamic_cmd) {
      strict = dyo.strict;
      const auto ds = detail::load_all(dyo);
      auto spec = TunerSpec::parse(d_tuner);
      spec.ga.population_size = d_population;
      auto priority = detail::split_list(d_priority);
      if (spec.prioritized) {
        if (priority.empty()) priority = detail::sensitive_options(ds, dyo.seed, d_rsd);
        spec.priority = priority;
      }
      spec.validate();
      std::vector<DynamicMode> modes;
      if (d_mode != "transfer") modes.push_back(DynamicMode::restart);
      if (d_mode != "restart") modes.push_back(DynamicMode::transfer);
      struct Job {
        DynamicMode mode;
        std::size_t repeat;
      };
      std::vector<Job> jobs;
      for (auto m : modes) {
        for (std::size_t k = 0; k < d_repeats; ++k) jobs.push_back({m, k});
      }
      auto runs = parallel_map(jobs.size(), dyo.jobs, [&](std::size_t i) {
        return run_dynamic(spec, ds, jobs[i].mode, d_budget, derive_seed(dyo.seed, "dynamic", jobs[i].repeat));
      });
      std::vector<Trajectory> all, restarted, transferred;
      for (std::size_t i = 0; i < runs.size(); ++i) {
        for (auto& t : runs[i].per_workload) {
          (jobs[i].mode == DynamicMode::restart ? restarted : transferred).push_back(t);
          all.push_back(std::move(t));
        }
      }
      std::map<std::string, std::string> settings = {{"command", "dynamic"},
                                                     {"mode", d_mode},
                                                     {"tuner", d_tuner},
                                                     {"budget", std::to_string(d_budget)},
                                                     {"repeats", std::to_string(d_repeats)},
                                                     {"population", std::to_string(d_population)},
                                                     {"priority_options", landscope::detail::join(priority, ",")}};
      const Format f = detail::resolve_format(dyo);
      auto prov = detail::provenance_of(dyo, ds, settings);
      artifacts.push_back({dyo.out, make_bundle(std::move(all), prov), f});
      if (!restarted.empty() && !transferred.empty()) {
        auto table = compare_trajectories(transferred, restarted, "transfer-" + spec.name(), "restarted-" + spec.name());
        const std::string path = dyo.out.empty() ? "" : dyo.out + ".verdict" + detail::extension(f);
        artifacts.push_back({path, make_bundle(std::move(table), prov), f});
      }
    } else if (*agreement_cmd) {
      strict = go.strict;
      if (g_humans.size() != 2) throw InvalidArgument("--human must be given exactly twice");
      const auto h1 = detail::load_labels(g_humans[0]);
      const auto h2 = detail::load_labels(g_humans[1]);
      const auto& order = h1.options;
      const auto l1 = detail::aligned(h1, order, g_humans[0]);
      const auto l2 = detail::aligned(h2, order, g_humans[1]);
      std::vector<std::string> consensus = l1;
      if (!g_consensus.empty()) consensus = detail::aligned(detail::load_labels(g_consensus), order, g_consensus);
      AgreementReport rep;
      rep.items = order.size();
      std::vector<double> llm_kappas;
      for (std::size_t i = 0; i < g_llms.size(); ++i) {
        const auto li = detail::aligned(detail::load_labels(g_llms[i]), order, g_llms[i]);
        llm_kappas.push_back(stats::cohens_kappa(consensus, li).kappa);
        rep.llm_names.push_back(i < g_llm_names.size() ? g_llm_names[i]
                                                       : std::filesystem::path(g_llms[i]).stem().string());
      }
      const auto hk = stats::cohens_kappa(l1, l2);
      degenerate = hk.degenerate;
      rep.summary = stats::overall_agreement(hk.kappa, std::move(llm_kappas));
      Provenance p;
      p.seed = go.seed;
      p.settings = {{"command", "agreement"},
                    {"human", landscope::detail::join(g_humans, ",")},
                    {"consensus", g_consensus.empty() ? g_humans[0] : g_consensus},
                    {"llm", landscope::detail::join(g_llms, ",")}};
      artifacts.push_back({go.out, make_bundle(std::move(rep), std::move(p)), detail::resolve_format(go)});
    }

    detail::publish(artifacts, out);
    if (strict && degenerate) {
      err << "error: undefined metric in output (--strict)\n";
      return kExitUndefined;
    }
    return kExitOk;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UndefinedMetric& e) {
    err << "error: " << e.what() << "\n";
    return strict ? kExitUndefined : kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
}

inline int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args);
}

}  // namespace landscope::cli
