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

// Dataset-backed configuration tuners.
//
// Every tuner queries an Evaluator that answers from the measured table.
// Proposals that are not measured rows are snapped to the nearest row by
// Hamming distance, so every evaluation is a real measurement.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "landscope/dataset.hpp"
#include "landscope/error.hpp"
#include "landscope/landscape.hpp"
#include "landscope/rng.hpp"

namespace landscope {

enum class TunerKind { random_search, hill_climbing, genetic, tpe };

struct GaParams {
  std::size_t population_size = 20;
  double crossover_probability = 0.9;
  double mutation_probability = 0.1;  // per gene
  double gene_swap_probability = 0.5;

  friend bool operator==(const GaParams&, const GaParams&) = default;
};

struct TpeParams {
  double good_fraction = 0.25;
  std::size_t candidate_count = 24;
  std::size_t startup_count = 10;  // random evaluations before the model is used

  friend bool operator==(const TpeParams&, const TpeParams&) = default;
};

struct TunerSpec {
  TunerKind kind = TunerKind::random_search;
  bool prioritized = false;
  std::vector<std::string> priority;  // option names favoured by the priority variants
  double priority_bias = 0.9;
  GaParams ga;
  TpeParams tpe;

  std::string name() const {
    switch (kind) {
      case TunerKind::random_search: return "rs";
      case TunerKind::hill_climbing: return prioritized ? "priority-hc" : "hc";
      case TunerKind::genetic: return prioritized ? "priority-ga" : "ga";
      case TunerKind::tpe: return "tpe";
    }
    return "?";
  }

  static TunerSpec parse(std::string_view name, std::vector<std::string> priority = {}) {
    TunerSpec s;
    if (name == "rs" || name == "random") {
      s.kind = TunerKind::random_search;
    } else if (name == "hc") {
      s.kind = TunerKind::hill_climbing;
    } else if (name == "ga") {
      s.kind = TunerKind::genetic;
    } else if (name == "tpe") {
      s.kind = TunerKind::tpe;
    } else if (name == "priority-hc" || name == "phc") {
      s.kind = TunerKind::hill_climbing;
      s.prioritized = true;
    } else if (name == "priority-ga" || name == "pga") {
      s.kind = TunerKind::genetic;
      s.prioritized = true;
    } else {
      throw InvalidArgument("unknown tuner '" + std::string(name) + "'");
    }
    if (s.prioritized) s.priority = std::move(priority);
    return s;
  }

  void validate() const {
    auto prob = [](double p, const char* what) {
      if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument(std::string(what) + " must be in [0, 1]");
    };
    prob(priority_bias, "priority bias");
    prob(ga.crossover_probability, "crossover probability");
    prob(ga.mutation_probability, "mutation probability");
    prob(ga.gene_swap_probability, "gene swap probability");
    prob(tpe.good_fraction, "good fraction");
    if (ga.population_size < 2) throw InvalidArgument("population size must be at least 2");
    if (tpe.candidate_count < 1) throw InvalidArgument("candidate count must be at least 1");
    if (prioritized && priority.empty()) throw InvalidArgument("priority tuner requires a non-empty priority option set");
    if (prioritized && kind != TunerKind::hill_climbing && kind != TunerKind::genetic) {
      throw InvalidArgument("only hill climbing and genetic tuners have priority variants");
    }
  }
};

// ----------------------------------------------------------------------------

class Evaluator {
 public:
  struct Result {
    std::size_t row = 0;
    double performance = 0;
    bool charged = false;
    bool snapped = false;
  };

  struct Record {
    std::size_t row;
    double performance;
  };

  // With charge_repeats, a re-query of an evaluated row is a fresh
  // measurement and consumes budget; otherwise it is served from the cache.
  Evaluator(const Dataset& ds, std::size_t budget, bool charge_repeats = false)
      : ds_(&ds), budget_(budget), charge_repeats_(charge_repeats), evaluated_(ds.size(), 0) {}

  const Dataset& dataset() const { return *ds_; }
  std::size_t budget() const { return budget_; }
  std::size_t used() const { return used_; }
  std::size_t remaining() const { return budget_ - used_; }
  bool exhausted() const { return used_ >= budget_; }
  bool evaluated(std::size_t row) const { return evaluated_[row] != 0; }
  std::size_t evaluated_count() const { return evaluated_count_; }
  bool all_evaluated() const { return evaluated_count_ == ds_->size(); }
  std::size_t snaps() const { return snaps_; }
  const std::vector<Record>& log() const { return log_; }

  // Nearest measured row; ties go to the lowest row index.
  std::size_t snap(const Configuration& c) const {
    if (auto hit = ds_->find(c)) return *hit;
    std::size_t best = 0, best_d = SIZE_MAX;
    for (std::size_t i = 0; i < ds_->size(); ++i) {
      const std::size_t d = hamming_distance(c, ds_->config(i));
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    return best;
  }

  Result evaluate(const Configuration& c) {
    const std::size_t row = snap(c);
    const bool snapped = ds_->config(row) != c;
    if (snapped) ++snaps_;
    Result r = evaluate_row(row);
    r.snapped = snapped;
    return r;
  }

  Result evaluate_row(std::size_t row) {
    const bool cached = evaluated_[row] && !charge_repeats_;
    if (!cached) {
      if (exhausted()) throw BudgetExhausted();
      ++used_;
      if (!evaluated_[row]) {
        evaluated_[row] = 1;
        ++evaluated_count_;
      }
      log_.push_back({row, ds_->performance(row)});
    }
    return {row, ds_->performance(row), !cached, false};
  }

 private:
  const Dataset* ds_;
  std::size_t budget_;
  bool charge_repeats_;
  std::size_t used_ = 0;
  std::vector<char> evaluated_;
  std::size_t evaluated_count_ = 0;
  std::size_t snaps_ = 0;
  std::vector<Record> log_;
};

// ----------------------------------------------------------------------------

enum class RegretMode { normalized, raw };

struct TrajectoryStep {
  std::size_t eval_index = 0;  // 1-based
  std::size_t row = 0;
  std::string configuration;
  double performance = 0;
  double best_so_far = 0;
  double regret = 0;

  friend bool operator==(const TrajectoryStep&, const TrajectoryStep&) = default;
};

struct Trajectory {
  std::string tuner;
  std::uint64_t seed = 0;
  std::string system;
  std::string workload;
  std::vector<TrajectoryStep> steps;
  double final_regret = 1;
  std::optional<std::size_t> workload_position;  // dynamic runs only, 1-based
  std::string mode;                               // dynamic runs only

  // 1-based index of the first evaluation with zero regret.
  std::optional<std::size_t> evaluations_to_optimum() const {
    for (const auto& s : steps) if (s.regret == 0) return s.eval_index;
    return std::nullopt;
  }

  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

// Gap of `performance` to the best observed, oriented so that 0 is optimal.
// Normalized regret divides by the best-to-worst span of the dataset.
inline double regret_of(const Dataset& ds, double performance, RegretMode mode = RegretMode::normalized) {
  const double best = ds.oriented(ds.best_performance());
  const double gap = ds.oriented(performance) - best;
  if (mode == RegretMode::raw) return gap;
  const double span = ds.oriented(ds.worst_performance()) - best;
  return span > 0 ? gap / span : 0.0;
}

inline Trajectory make_trajectory(const TunerSpec& spec, std::uint64_t seed, const Evaluator& ev,
                                  RegretMode mode = RegretMode::normalized) {
  const Dataset& ds = ev.dataset();
  Trajectory t;
  t.tuner = spec.name();
  t.seed = seed;
  t.system = ds.system();
  t.workload = ds.workload();
  std::optional<double> best;
  for (std::size_t k = 0; k < ev.log().size(); ++k) {
    const auto& rec = ev.log()[k];
    if (!best || ds.better(rec.performance, *best)) best = rec.performance;
    t.steps.push_back({k + 1, rec.row, ds.render(ds.config(rec.row)), rec.performance, *best,
                       regret_of(ds, *best, mode)});
  }
  t.final_regret = t.steps.empty() ? (mode == RegretMode::normalized ? 1.0 : regret_of(ds, ds.worst_performance(), mode))
                                   : t.steps.back().regret;
  return t;
}

namespace detail {

inline std::vector<char> priority_mask(const Dataset& ds, const TunerSpec& spec) {
  std::vector<char> mask(ds.dimension(), 0);
  if (!spec.prioritized) return mask;
  for (const auto& name : spec.priority) {
    auto col = ds.option_index(name);
    if (!col) throw InvalidArgument("priority option '" + name + "' is not in the dataset");
    mask[*col] = 1;
  }
  return mask;
}

// Uniform row that has not been evaluated yet. Requires one to exist.
inline std::size_t fresh_row(const Evaluator& ev, Rng& rng) {
  const std::size_t m = ev.dataset().size();
  const std::size_t open = m - ev.evaluated_count();
  std::size_t k = rng.below(open);
  for (std::size_t i = 0; i < m; ++i) {
    if (!ev.evaluated(i) && k-- == 0) return i;
  }
  return 0;
}

inline bool can_continue(const Evaluator& ev) { return !ev.exhausted() && !ev.all_evaluated(); }

inline void run_random_search(Evaluator& ev, Rng& rng) {
  const std::size_t m = ev.dataset().size();
  while (!ev.exhausted()) ev.evaluate_row(rng.below(m));
}

// First-improvement hill climbing over one-option mutations. Each move is
// tried at most once from a given position; when every move has been tried
// without improvement, the search restarts from an unevaluated row.
inline void run_hill_climbing(Evaluator& ev, Rng& rng, const TunerSpec& spec) {
  const Dataset& ds = ev.dataset();
  const std::size_t n = ds.dimension();
  const auto mask = priority_mask(ds, spec);
  if (!can_continue(ev)) return;

  std::size_t cur = ev.evaluate_row(fresh_row(ev, rng)).row;
  std::vector<std::vector<char>> tried(n);
  auto reset_tried = [&]() {
    for (std::size_t i = 0; i < n; ++i) tried[i].assign(ds.options()[i].domain.size(), 0);
    for (std::size_t i = 0; i < n; ++i) tried[i][ds.config(cur)[i]] = 1;
  };
  reset_tried();

  std::vector<std::size_t> prio_open, other_open, values;
  while (can_continue(ev)) {
    prio_open.clear();
    other_open.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (std::find(tried[i].begin(), tried[i].end(), 0) == tried[i].end()) continue;
      (mask[i] ? prio_open : other_open).push_back(i);
    }
    if (prio_open.empty() && other_open.empty()) {
      cur = ev.evaluate_row(fresh_row(ev, rng)).row;
      reset_tried();
      continue;
    }
    const std::vector<std::size_t>* group;
    if (prio_open.empty()) group = &other_open;
    else if (other_open.empty()) group = &prio_open;
    else group = rng.bernoulli(spec.priority_bias) ? &prio_open : &other_open;
    const std::size_t opt = (*group)[rng.below(group->size())];
    values.clear();
    for (std::size_t v = 0; v < tried[opt].size(); ++v) if (!tried[opt][v]) values.push_back(v);
    const std::size_t val = values[rng.below(values.size())];
    tried[opt][val] = 1;

    Configuration cand = ds.config(cur);
    cand[opt] = static_cast<std::uint32_t>(val);
    const auto res = ev.evaluate(cand);
    if (ds.better(res.performance, ds.performance(cur))) {
      cur = res.row;
      reset_tried();
    }
  }
}

struct Member {
  std::size_t row;
  double performance;
};

// Elitist truncation to `size` members, preferring distinct rows.
inline std::vector<Member> select_survivors(const Dataset& ds, std::vector<Member> pool, std::size_t size) {
  std::stable_sort(pool.begin(), pool.end(), [&](const Member& a, const Member& b) {
    return ds.oriented(a.performance) < ds.oriented(b.performance);
  });
  std::vector<Member> out, dups;
  std::set<std::size_t> taken;
  for (const auto& m : pool) {
    if (taken.insert(m.row).second) out.push_back(m);
    else dups.push_back(m);
  }
  for (const auto& m : dups) out.push_back(m);
  if (out.size() > size) out.resize(size);
  return out;
}

struct GaOutcome {
  std::vector<std::size_t> final_population;
  std::size_t generations = 0;  // including the initial population
};

inline GaOutcome run_genetic(Evaluator& ev, Rng& rng, const TunerSpec& spec,
                             const std::vector<Configuration>* initial = nullptr) {
  const Dataset& ds = ev.dataset();
  const std::size_t n = ds.dimension();
  const std::size_t pop_size = spec.ga.population_size;
  if (ev.budget() < pop_size) throw InvalidArgument("budget below one generation");
  const auto mask = priority_mask(ds, spec);
  GaOutcome out;

  std::vector<Member> pop;
  std::set<std::size_t> seeded;
  if (initial) {
    for (const auto& c : *initial) {
      if (pop.size() >= pop_size || !can_continue(ev)) break;
      const std::size_t row = ev.snap(c);
      if (!seeded.insert(row).second) continue;
      auto r = ev.evaluate_row(row);
      pop.push_back({r.row, r.performance});
    }
  }
  while (pop.size() < pop_size && can_continue(ev)) {
    auto r = ev.evaluate_row(fresh_row(ev, rng));
    pop.push_back({r.row, r.performance});
  }
  out.generations = 1;

  auto tournament = [&]() -> const Member& {
    const Member& a = pop[rng.below(pop.size())];
    const Member& b = pop[rng.below(pop.size())];
    return ds.better(b.performance, a.performance) ? b : a;
  };
  auto mutate = [&](Configuration& c) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!rng.bernoulli(spec.ga.mutation_probability)) continue;
      const auto& opt = ds.options()[i];
      const std::size_t k = opt.domain.size();
      if (opt.is_numeric()) {
        c[i] = rng.bernoulli(0.5) ? 0u : static_cast<std::uint32_t>(k - 1);
      } else {
        c[i] = static_cast<std::uint32_t>(rng.below(k));
      }
    }
  };
  auto swap_probability = [&](std::size_t gene) {
    if (!spec.prioritized) return spec.ga.gene_swap_probability;
    return mask[gene] ? spec.priority_bias : 1.0 - spec.priority_bias;
  };
  auto breed = [&]() {
    Configuration a = ds.config(tournament().row);
    Configuration b = ds.config(tournament().row);
    if (rng.bernoulli(spec.ga.crossover_probability)) {
      for (std::size_t i = 0; i < n; ++i) {
        if (rng.bernoulli(swap_probability(i))) std::swap(a[i], b[i]);
      }
    }
    mutate(a);
    mutate(b);
    return std::pair{std::move(a), std::move(b)};
  };

  constexpr int kRetries = 10;
  constexpr std::size_t kMaxStalledGenerations = 50;
  std::size_t stalled = 0;
  while (can_continue(ev) && stalled < kMaxStalledGenerations) {
    const std::size_t used_before = ev.used();
    std::vector<Member> offspring;
    while (offspring.size() < pop_size && can_continue(ev)) {
      auto children = breed();
      for (Configuration* child : {&children.first, &children.second}) {
        if (offspring.size() >= pop_size || !can_continue(ev)) break;
        std::size_t row = ev.snap(*child);
        // Re-breed offspring that duplicate an already measured row.
        for (int attempt = 0; ev.evaluated(row) && attempt < kRetries; ++attempt) {
          auto again = breed();
          *child = std::move(again.first);
          row = ev.snap(*child);
        }
        auto r = ev.evaluate_row(row);
        offspring.push_back({r.row, r.performance});
      }
    }
    if (offspring.size() == pop_size) ++out.generations;
    stalled = ev.used() == used_before ? stalled + 1 : 0;
    std::vector<Member> pool = pop;
    pool.insert(pool.end(), offspring.begin(), offspring.end());
    pop = select_survivors(ds, std::move(pool), pop_size);
  }
  for (const auto& m : pop) out.final_population.push_back(m.row);
  return out;
}

// Tree-structured Parzen estimator over per-option categorical densities
// with add-one smoothing.
inline void run_tpe(Evaluator& ev, Rng& rng, const TunerSpec& spec) {
  const Dataset& ds = ev.dataset();
  const std::size_t n = ds.dimension();
  const std::size_t startup = std::max<std::size_t>(1, spec.tpe.startup_count);
  while (ev.log().size() < startup && can_continue(ev)) ev.evaluate_row(fresh_row(ev, rng));

  std::vector<const Evaluator::Record*> history;
  std::vector<std::vector<double>> good(n), bad(n);
  while (can_continue(ev)) {
    history.clear();
    for (const auto& rec : ev.log()) history.push_back(&rec);
    std::stable_sort(history.begin(), history.end(), [&](auto* a, auto* b) {
      return ds.oriented(a->performance) < ds.oriented(b->performance);
    });
    const std::size_t n_good = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(spec.tpe.good_fraction * static_cast<double>(history.size()))));
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t k = ds.options()[i].domain.size();
      good[i].assign(k, 1.0);
      bad[i].assign(k, 1.0);
    }
    for (std::size_t h = 0; h < history.size(); ++h) {
      const auto& c = ds.config(history[h]->row);
      for (std::size_t i = 0; i < n; ++i) (h < n_good ? good : bad)[i][c[i]] += 1.0;
    }
    for (std::size_t i = 0; i < n; ++i) {
      double sg = 0, sb = 0;
      for (double x : good[i]) sg += x;
      for (double x : bad[i]) sb += x;
      for (auto& x : good[i]) x /= sg;
      for (auto& x : bad[i]) x /= sb;
    }

    std::vector<std::pair<double, Configuration>> candidates;
    for (std::size_t k = 0; k < spec.tpe.candidate_count; ++k) {
      Configuration c;
      c.values.resize(n);
      double score = 0;
      for (std::size_t i = 0; i < n; ++i) {
        double u = rng.uniform(), acc = 0;
        std::size_t v = 0;
        for (; v + 1 < good[i].size(); ++v) {
          acc += good[i][v];
          if (u < acc) break;
        }
        c[i] = static_cast<std::uint32_t>(v);
        score += std::log(good[i][v]) - std::log(bad[i][v]);
      }
      candidates.emplace_back(score, std::move(c));
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    std::optional<std::size_t> pick;
    for (const auto& [score, c] : candidates) {
      const std::size_t row = ev.snap(c);
      if (!ev.evaluated(row)) {
        pick = row;
        break;
      }
    }
    ev.evaluate_row(pick ? *pick : fresh_row(ev, rng));
  }
}

}  // namespace detail

// Runs one tuner until its budget is spent, or until every row has been
// measured for the tuners that never re-measure.
inline Trajectory run_tuner(const TunerSpec& spec, const Dataset& ds, std::size_t budget, std::uint64_t seed,
                            RegretMode mode = RegretMode::normalized) {
  spec.validate();
  if (budget < 1) throw InvalidArgument("budget must be at least 1");
  Rng rng(seed);
  Evaluator ev(ds, budget, spec.kind == TunerKind::random_search);
  switch (spec.kind) {
    case TunerKind::random_search: detail::run_random_search(ev, rng); break;
    case TunerKind::hill_climbing: detail::run_hill_climbing(ev, rng, spec); break;
    case TunerKind::genetic: detail::run_genetic(ev, rng, spec); break;
    case TunerKind::tpe: detail::run_tpe(ev, rng, spec); break;
  }
  return make_trajectory(spec, seed, ev, mode);
}

// ----------------------------------------------------------------------------
// Dynamic workloads

enum class DynamicMode { restart, transfer };

inline std::string_view to_string(DynamicMode m) { return m == DynamicMode::restart ? "restart" : "transfer"; }

inline DynamicMode parse_dynamic_mode(std::string_view s) {
  if (s == "restart") return DynamicMode::restart;
  if (s == "transfer") return DynamicMode::transfer;
  throw InvalidArgument("mode must be 'restart' or 'transfer'");
}

struct DynamicRun {
  DynamicMode mode = DynamicMode::restart;
  std::vector<std::size_t> workload_order;  // indices into the workload list
  std::vector<Trajectory> per_workload;     // in arrival order
  std::vector<std::size_t> generations;     // GA generations per arrival
};

// GA over a seeded random arrival order of workloads. In transfer mode each
// arrival starts from the previous arrival's final population; in restart
// mode it starts from scratch. Per-arrival GA seeds depend only on the run
// seed and arrival position, so both modes see identical first arrivals.
inline DynamicRun run_dynamic(const TunerSpec& spec, const std::vector<Dataset>& workloads, DynamicMode mode,
                              std::size_t budget_per_workload, std::uint64_t seed) {
  if (spec.kind != TunerKind::genetic) throw InvalidArgument("dynamic runs use the genetic tuner");
  spec.validate();
  if (workloads.size() < 2) throw InvalidArgument(">= 2 workloads required");
  for (const auto& w : workloads) {
    if (!w.same_schema(workloads.front())) {
      throw DataError("schema mismatch between workloads '" + workloads.front().workload() + "' and '" +
                      w.workload() + "'");
    }
  }
  DynamicRun run;
  run.mode = mode;
  run.workload_order.resize(workloads.size());
  std::iota(run.workload_order.begin(), run.workload_order.end(), std::size_t{0});
  Rng order_rng(derive_seed(seed, "dynamic-order", 0));
  order_rng.shuffle(run.workload_order);

  std::vector<Configuration> carried;
  for (std::size_t pos = 0; pos < run.workload_order.size(); ++pos) {
    const Dataset& ds = workloads[run.workload_order[pos]];
    const std::uint64_t ga_seed = derive_seed(seed, "dynamic-ga", pos);
    Rng rng(ga_seed);
    Evaluator ev(ds, budget_per_workload);
    const bool transfer = mode == DynamicMode::transfer && !carried.empty();
    auto outcome = detail::run_genetic(ev, rng, spec, transfer ? &carried : nullptr);
    carried.clear();
    for (auto row : outcome.final_population) carried.push_back(ds.config(row));
    Trajectory t = make_trajectory(spec, ga_seed, ev);
    t.tuner = std::string(mode == DynamicMode::transfer ? "transfer-" : "restarted-") + spec.name();
    t.workload_position = pos + 1;
    t.mode = std::string(to_string(mode));
    run.per_workload.push_back(std::move(t));
    run.generations.push_back(outcome.generations);
  }
  return run;
}

}  // namespace landscope
