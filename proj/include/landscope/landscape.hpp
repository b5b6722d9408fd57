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

// Fitness landscape metrics over a sampled configuration dataset.
//
// The landscape is the triple (sampled configurations, Hamming neighborhood
// of radius eps, measured performance). Everything here is a pure function of
// the dataset plus explicit seeds.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "landscope/dataset.hpp"
#include "landscope/error.hpp"
#include "landscope/rng.hpp"

namespace landscope {

inline std::size_t hamming_distance(const Configuration& a, const Configuration& b) {
  if (a.size() != b.size()) throw InvalidArgument("hamming_distance: mismatched configuration lengths");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

// Pairwise Hamming structure of a dataset: for every row the other rows
// grouped by exact distance, plus the connected components of the
// "distance <= d" graph for every d.
//
// Up to kTabulateLimit rows the per-row shells are precomputed (4 bytes per
// ordered pair); larger datasets compute shells on demand.
class DistanceIndex {
 public:
  static constexpr std::size_t kTabulateLimit = 6000;

  explicit DistanceIndex(const Dataset& ds)
      : rows_(ds.size()), dim_(ds.dimension()), cells_(rows_ * dim_), tabulated_(rows_ <= kTabulateLimit) {
    for (std::size_t i = 0; i < rows_; ++i) {
      std::copy(ds.config(i).values.begin(), ds.config(i).values.end(), cells_.begin() + i * dim_);
    }
    histogram_.assign(dim_ + 1, 0);
    if (tabulated_) {
      order_.resize(rows_ * (rows_ - 1));
      offsets_.resize(rows_ * (dim_ + 2));
      std::vector<std::uint32_t> count(dim_ + 1);
      std::vector<std::uint16_t> dist(rows_);
      for (std::size_t i = 0; i < rows_; ++i) {
        std::fill(count.begin(), count.end(), 0);
        for (std::size_t j = 0; j < rows_; ++j) {
          if (j == i) continue;
          dist[j] = static_cast<std::uint16_t>(distance(i, j));
          ++count[dist[j]];
        }
        std::uint32_t* off = &offsets_[i * (dim_ + 2)];
        off[0] = 0;
        for (std::size_t d = 0; d <= dim_; ++d) off[d + 1] = off[d] + count[d];
        std::vector<std::uint32_t> cursor(off, off + dim_ + 1);
        std::uint32_t* base = &order_[i * (rows_ - 1)];
        for (std::size_t j = 0; j < rows_; ++j) {
          if (j == i) continue;
          base[cursor[dist[j]]++] = static_cast<std::uint32_t>(j);
        }
        for (std::size_t d = 1; d <= dim_; ++d) histogram_[d] += count[d];
      }
    } else {
      for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < rows_; ++j) {
          if (j != i) ++histogram_[distance(i, j)];
        }
      }
    }
    build_components();
  }

  std::size_t size() const { return rows_; }
  std::size_t dimension() const { return dim_; }

  std::size_t distance(std::size_t i, std::size_t j) const {
    const std::uint32_t* a = &cells_[i * dim_];
    const std::uint32_t* b = &cells_[j * dim_];
    std::size_t d = 0;
    for (std::size_t k = 0; k < dim_; ++k) d += a[k] != b[k];
    return d;
  }

  // Rows at exactly distance d from row i, in ascending row order. In
  // streaming mode the span refers to a thread-local buffer valid until the
  // next call on the same thread.
  std::span<const std::uint32_t> shell(std::size_t i, std::size_t d) const {
    if (d == 0 || d > dim_) return {};
    if (tabulated_) {
      const std::uint32_t* off = &offsets_[i * (dim_ + 2)];
      const std::uint32_t* base = &order_[i * (rows_ - 1)];
      return {base + off[d], base + off[d + 1]};
    }
    thread_local std::vector<std::uint32_t> scratch;
    scratch.clear();
    for (std::size_t j = 0; j < rows_; ++j) {
      if (j != i && distance(i, j) == d) scratch.push_back(static_cast<std::uint32_t>(j));
    }
    return scratch;
  }

  // Number of ordered pairs (i, j), i != j, at each exact distance.
  const std::vector<std::uint64_t>& pair_histogram() const { return histogram_; }

  double average_degree(std::size_t radius) const {
    std::uint64_t total = 0;
    for (std::size_t d = 1; d <= std::min(radius, dim_); ++d) total += histogram_[d];
    return static_cast<double>(total) / static_cast<double>(rows_);
  }

  // Component label of row i in the graph joining rows at distance <= d.
  std::uint32_t component(std::size_t d, std::size_t i) const { return components_[std::min(d, dim_) * rows_ + i]; }

 private:
  void build_components() {
    std::vector<std::uint32_t> parent(rows_);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    components_.resize((dim_ + 1) * rows_);
    for (std::size_t i = 0; i < rows_; ++i) components_[i] = static_cast<std::uint32_t>(i);
    for (std::size_t d = 1; d <= dim_; ++d) {
      for (std::size_t i = 0; i < rows_; ++i) {
        for (auto j : shell(i, d)) {
          if (j > i) {
            auto a = find(static_cast<std::uint32_t>(i)), b = find(j);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
          }
        }
      }
      for (std::size_t i = 0; i < rows_; ++i) components_[d * rows_ + i] = find(static_cast<std::uint32_t>(i));
    }
  }

  std::size_t rows_;
  std::size_t dim_;
  std::vector<std::uint32_t> cells_;
  bool tabulated_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint64_t> histogram_;
  std::vector<std::uint32_t> components_;
};

// Neighborhood graph: N(i) = rows within Hamming distance <= radius.
struct LandscapeGraph {
  const Dataset* dataset = nullptr;
  std::shared_ptr<const DistanceIndex> distances;
  std::size_t radius = 1;
  std::vector<std::vector<std::size_t>> adjacency;  // sorted, self excluded
  double average_degree = 0;

  std::size_t size() const { return adjacency.size(); }
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return adjacency[i]; }
};

// The requested average degree is not reachable within the radius limit.
class NeighborhoodUnreachable : public UndefinedMetric {
 public:
  NeighborhoodUnreachable(double target, double achieved, std::size_t max_radius)
      : UndefinedMetric("neighborhood target unreachable: average degree " + detail::format_double(achieved) +
                        " at radius " + std::to_string(max_radius) + " is below target " +
                        detail::format_double(target)),
        target_(target),
        achieved_(achieved) {}
  double target() const { return target_; }
  double achieved() const { return achieved_; }

 private:
  double target_;
  double achieved_;
};

// The graph keeps a pointer to `ds`; the dataset must outlive it.
inline LandscapeGraph build_graph(const Dataset& ds, std::size_t radius,
                                  std::shared_ptr<const DistanceIndex> index = nullptr) {
  if (radius == 0) throw InvalidArgument("neighborhood radius must be positive");
  if (!index) index = std::make_shared<const DistanceIndex>(ds);
  LandscapeGraph g;
  g.dataset = &ds;
  g.distances = index;
  g.radius = radius;
  g.adjacency.resize(ds.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    auto& adj = g.adjacency[i];
    for (std::size_t d = 1; d <= std::min(radius, ds.dimension()); ++d) {
      for (auto j : index->shell(i, d)) adj.push_back(j);
    }
    std::sort(adj.begin(), adj.end());
    total += adj.size();
  }
  g.average_degree = static_cast<double>(total) / static_cast<double>(ds.size());
  return g;
}

struct NeighborhoodSettings {
  std::optional<double> target_avg_degree;  // default: dimensionality n
  std::optional<std::size_t> max_radius;    // default: n
};

inline double resolved_target(const Dataset& ds, const NeighborhoodSettings& s) {
  return s.target_avg_degree.value_or(static_cast<double>(ds.dimension()));
}

namespace detail {

inline std::optional<std::size_t> adaptive_radius(const DistanceIndex& index, double target, std::size_t max_radius) {
  for (std::size_t eps = 1; eps <= max_radius; ++eps) {
    if (index.average_degree(eps) >= target) return eps;
  }
  return std::nullopt;
}

}  // namespace detail

// Smallest radius in 1..max_radius whose average degree reaches the target.
// A dataset dense enough at radius 1 gets the standard one-flip neighborhood.
inline LandscapeGraph build_neighborhood(const Dataset& ds, const NeighborhoodSettings& settings = {},
                                         std::shared_ptr<const DistanceIndex> index = nullptr) {
  const double target = resolved_target(ds, settings);
  if (!(target > 0)) throw InvalidArgument("target average degree must be positive");
  const std::size_t max_radius = settings.max_radius.value_or(ds.dimension());
  if (max_radius == 0) throw InvalidArgument("max radius must be positive");
  if (!index) index = std::make_shared<const DistanceIndex>(ds);
  auto eps = detail::adaptive_radius(*index, target, max_radius);
  if (!eps) throw NeighborhoodUnreachable(target, index->average_degree(max_radius), max_radius);
  return build_graph(ds, *eps, index);
}

// Like build_neighborhood, but falls back to max_radius instead of failing.
inline LandscapeGraph build_neighborhood_best_effort(const Dataset& ds, const NeighborhoodSettings& settings = {},
                                                     std::shared_ptr<const DistanceIndex> index = nullptr) {
  const double target = resolved_target(ds, settings);
  const std::size_t max_radius = settings.max_radius.value_or(ds.dimension());
  if (!index) index = std::make_shared<const DistanceIndex>(ds);
  auto eps = detail::adaptive_radius(*index, target, max_radius);
  return build_graph(ds, eps.value_or(std::max<std::size_t>(max_radius, 1)), index);
}

// ----------------------------------------------------------------------------
// Local optima

enum class QualityStatus { ok, all_tied, no_optima };

inline std::string_view to_string(QualityStatus s) {
  switch (s) {
    case QualityStatus::ok: return "ok";
    case QualityStatus::all_tied: return "all_tied";
    case QualityStatus::no_optima: return "no_optima";
  }
  return "?";
}

struct LocalOptimaSet {
  std::vector<std::size_t> members;   // ascending
  std::vector<std::size_t> isolated;  // members without any neighbor
  double proportion = 0;              // l_p
  double quality = 0;                 // l_q, higher is better
  QualityStatus quality_status = QualityStatus::ok;

  bool degenerate() const { return quality_status != QualityStatus::ok; }
};

// Relative quality of a set of local optima:
//   (mean f over all rows - mean f over optima) / (mean f over all rows - f*)
// on objective-oriented values, so 1 means every optimum is globally best.
inline std::pair<double, QualityStatus> local_optima_quality(const Dataset& ds,
                                                             std::span<const std::size_t> members) {
  const auto& rows = ds.rows();
  const bool all_tied = std::all_of(rows.begin(), rows.end(),
                                    [&](const Row& r) { return r.performance == rows.front().performance; });
  if (all_tied) return {1.0, QualityStatus::all_tied};
  if (members.empty()) return {std::nan(""), QualityStatus::no_optima};
  double mean_all = 0;
  for (const auto& r : rows) mean_all += ds.oriented(r.performance);
  mean_all /= static_cast<double>(rows.size());
  double mean_opt = 0;
  for (auto i : members) mean_opt += ds.oriented(ds.performance(i));
  mean_opt /= static_cast<double>(members.size());
  const double best = ds.oriented(ds.best_performance());
  return {(mean_all - mean_opt) / (mean_all - best), QualityStatus::ok};
}

// Rows strictly better than every graph neighbor. Rows with no neighbors are
// counted as optima and also listed in `isolated`.
inline LocalOptimaSet find_local_optima(const LandscapeGraph& g) {
  const Dataset& ds = *g.dataset;
  LocalOptimaSet out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double fi = ds.performance(i);
    const auto& adj = g.neighbors(i);
    const bool dominates = std::all_of(adj.begin(), adj.end(), [&](std::size_t j) { return ds.better(fi, ds.performance(j)); });
    if (!dominates) continue;
    out.members.push_back(i);
    if (adj.empty()) out.isolated.push_back(i);
  }
  out.proportion = static_cast<double>(out.members.size()) / static_cast<double>(ds.size());
  std::tie(out.quality, out.quality_status) = local_optima_quality(ds, out.members);
  return out;
}

// ----------------------------------------------------------------------------
// Basins of attraction

// canonical: first-improvement scanning neighbors in ascending row order.
// randomized: first-improvement over a freshly shuffled neighbor order at
// every step.
enum class BasinMode { canonical, randomized };

inline std::string_view to_string(BasinMode m) { return m == BasinMode::canonical ? "canonical" : "randomized"; }

struct BasinMap {
  // Row index of the fixed point reached from each row. Fixed points are
  // strict local optima, or plateau rows whose neighbors are all tied or
  // worse.
  std::vector<std::size_t> assignment;
  std::map<std::size_t, double> proportion;  // fixed point -> |basin| / |rows|

  std::size_t basin_size(std::size_t attractor) const {
    return static_cast<std::size_t>(std::count(assignment.begin(), assignment.end(), attractor));
  }
};

inline BasinMap compute_basins(const LandscapeGraph& g, BasinMode mode = BasinMode::canonical, std::uint64_t seed = 0) {
  const Dataset& ds = *g.dataset;
  const std::size_t m = g.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  BasinMap out;
  out.assignment.assign(m, kUnset);

  if (mode == BasinMode::canonical) {
    // With a fixed scan order the successor of a row is unique, so the
    // climb from i ends wherever the climb from its successor ends.
    auto successor = [&](std::size_t i) {
      for (auto j : g.neighbors(i)) {
        if (ds.better(ds.performance(j), ds.performance(i))) return j;
      }
      return i;
    };
    std::vector<std::size_t> path;
    for (std::size_t start = 0; start < m; ++start) {
      if (out.assignment[start] != kUnset) continue;
      path.clear();
      std::size_t cur = start;
      while (out.assignment[cur] == kUnset) {
        path.push_back(cur);
        const std::size_t next = successor(cur);
        if (next == cur) {
          out.assignment[cur] = cur;
          break;
        }
        cur = next;
      }
      const std::size_t attractor = out.assignment[cur];
      for (auto p : path) out.assignment[p] = attractor;
    }
  } else {
    Rng rng(seed);
    std::vector<std::size_t> order;
    for (std::size_t start = 0; start < m; ++start) {
      std::size_t cur = start;
      for (;;) {
        order = g.neighbors(cur);
        rng.shuffle(order);
        auto it = std::find_if(order.begin(), order.end(),
                               [&](std::size_t j) { return ds.better(ds.performance(j), ds.performance(cur)); });
        if (it == order.end()) break;
        cur = *it;
      }
      out.assignment[start] = cur;
    }
  }

  std::map<std::size_t, std::size_t> counts;
  for (auto a : out.assignment) ++counts[a];
  for (auto [a, c] : counts) out.proportion[a] = static_cast<double>(c) / static_cast<double>(m);
  return out;
}

// Share of rows whose climb ends at a member of the global-optimum proxy.
inline double global_basin_proportion(const BasinMap& basins, const GlobalOptimumProxy& proxy) {
  std::size_t hits = 0;
  for (auto a : basins.assignment) hits += proxy.contains(a);
  return static_cast<double>(hits) / static_cast<double>(basins.assignment.size());
}

// Basin share at which 20 uniform samples hit the basin with 99% probability.
inline double easy_basin_threshold_exact() { return 1.0 - std::pow(1.0 - 0.99, 1.0 / 20.0); }
inline constexpr double kEasyBasinThreshold = 0.21;

// ----------------------------------------------------------------------------
// Fitness-distance correlation

inline std::vector<std::size_t> distances_to_nearest(const Dataset& ds, const GlobalOptimumProxy& proxy) {
  std::vector<std::size_t> out(ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) {
    std::size_t best = ds.dimension() + 1;
    for (auto g : proxy.rows) best = std::min(best, hamming_distance(ds.config(i), ds.config(g)));
    out[i] = best;
  }
  return out;
}

// Pearson correlation between objective-oriented performance and Hamming
// distance to the nearest proxy member, with population moments.
inline double fdc(const Dataset& ds, const GlobalOptimumProxy& proxy) {
  const auto dist = distances_to_nearest(ds, proxy);
  const double s = static_cast<double>(ds.size());
  double mf = 0, md = 0;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    mf += ds.oriented(ds.performance(i));
    md += static_cast<double>(dist[i]);
  }
  mf /= s;
  md /= s;
  double cov = 0, vf = 0, vd = 0;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const double a = ds.oriented(ds.performance(i)) - mf;
    const double b = static_cast<double>(dist[i]) - md;
    cov += a * b;
    vf += a * a;
    vd += b * b;
  }
  if (vf == 0) throw UndefinedMetric("FDC undefined (zero fitness variance)");
  if (vd == 0) throw UndefinedMetric("FDC undefined (zero distance variance)");
  return (cov / s) / (std::sqrt(vf / s) * std::sqrt(vd / s));
}

// ----------------------------------------------------------------------------
// Random walk and autocorrelation

struct Walk {
  std::vector<std::size_t> visited;     // row indices in visiting order
  std::vector<std::size_t> step_sizes;  // Hamming distance of each transition

  std::size_t length() const { return visited.size(); }
};

// Random walk that runs until every row has been visited.
//
// Each step scans step sizes d = 1, 2, ... and moves to a uniformly chosen
// unvisited row at distance exactly d when one exists. With none, it falls
// back to a uniformly chosen visited row at distance d, but only while the
// "distance <= d" component of the current row still holds unvisited rows.
// A step that finds nothing admissible at any d (or a run of more than
// rows * dimension consecutive revisits) jumps to the nearest unvisited row.
inline Walk random_walk(const Dataset& ds, const DistanceIndex& index, std::uint64_t seed) {
  const std::size_t m = ds.size();
  const std::size_t n = ds.dimension();
  Rng rng(seed);
  Walk w;
  std::vector<char> seen(m, 0);
  // Unvisited rows per (d, component) for the fallback rule.
  std::vector<std::vector<std::uint32_t>> open(n + 1, std::vector<std::uint32_t>(m, 0));
  for (std::size_t d = 0; d <= n; ++d) {
    for (std::size_t i = 0; i < m; ++i) ++open[d][index.component(d, i)];
  }
  auto mark = [&](std::size_t i) {
    seen[i] = 1;
    for (std::size_t d = 0; d <= n; ++d) --open[d][index.component(d, i)];
  };

  std::size_t cur = rng.below(m);
  w.visited.push_back(cur);
  mark(cur);
  std::size_t remaining = m - 1;
  std::size_t revisit_run = 0;
  const std::size_t stall_limit = m * std::max<std::size_t>(n, 1);
  std::vector<std::uint32_t> fresh;

  auto jump_to_nearest_unvisited = [&]() {
    for (std::size_t d = 1; d <= n; ++d) {
      fresh.clear();
      for (auto j : index.shell(cur, d)) if (!seen[j]) fresh.push_back(j);
      if (!fresh.empty()) return std::pair<std::size_t, std::size_t>{fresh[rng.below(fresh.size())], d};
    }
    return std::pair<std::size_t, std::size_t>{cur, 0};  // unreachable while rows remain
  };

  while (remaining > 0) {
    std::size_t next = cur, step = 0;
    if (revisit_run <= stall_limit) {
      for (std::size_t d = 1; d <= n && step == 0; ++d) {
        auto shell = index.shell(cur, d);
        if (shell.empty()) continue;
        fresh.clear();
        for (auto j : shell) if (!seen[j]) fresh.push_back(j);
        if (!fresh.empty()) {
          next = fresh[rng.below(fresh.size())];
          step = d;
        } else if (open[d][index.component(d, cur)] > 0) {
          next = shell[rng.below(shell.size())];
          step = d;
        }
      }
    }
    if (step == 0) std::tie(next, step) = jump_to_nearest_unvisited();
    if (seen[next]) {
      ++revisit_run;
    } else {
      revisit_run = 0;
      mark(next);
      --remaining;
    }
    cur = next;
    w.visited.push_back(cur);
    w.step_sizes.push_back(step);
  }
  return w;
}

inline Walk random_walk(const LandscapeGraph& g, std::uint64_t seed) {
  return random_walk(*g.dataset, *g.distances, seed);
}

// Lag-d autocorrelation of a fitness series:
//   r(d) = sum_{i<N-d} (f_i - mean)(f_{i+d} - mean) / sum_{i<N-d} (f_i - mean)^2
// with the mean taken over the whole series.
inline double autocorrelation(std::span<const double> series, std::size_t lag = 1) {
  const std::size_t n = series.size();
  if (lag == 0) throw InvalidArgument("autocorrelation lag must be positive");
  if (n < lag + 2) throw UndefinedMetric("autocorrelation undefined (walk shorter than lag + 2)");
  const double mean = std::accumulate(series.begin(), series.end(), 0.0) / static_cast<double>(n);
  double num = 0, den = 0;
  for (std::size_t i = 0; i + lag < n; ++i) {
    const double a = series[i] - mean;
    num += a * (series[i + lag] - mean);
    den += a * a;
  }
  if (den == 0) throw UndefinedMetric("autocorrelation undefined (zero variance)");
  return num / den;
}

inline std::vector<double> walk_fitness(const Walk& w, const Dataset& ds) {
  std::vector<double> f;
  f.reserve(w.length());
  for (auto i : w.visited) f.push_back(ds.performance(i));
  return f;
}

inline double autocorrelation(const Walk& w, const Dataset& ds, std::size_t lag = 1) {
  const auto f = walk_fitness(w, ds);
  return autocorrelation(std::span<const double>(f), lag);
}

// ----------------------------------------------------------------------------
// Tiers

enum class FdcTier { guided, irregular, deceptive };
enum class QualityTier { high, medium, low };
enum class RuggednessTier { smooth, moderate, rugged };

inline FdcTier classify_fdc(double rho) {
  if (rho >= 0.15) return FdcTier::guided;
  if (rho <= -0.15) return FdcTier::deceptive;
  return FdcTier::irregular;
}

inline QualityTier classify_quality(double lq) {
  if (lq >= 0.67) return QualityTier::high;
  if (lq <= 0.33) return QualityTier::low;
  return QualityTier::medium;
}

inline RuggednessTier classify_ruggedness(double r) {
  if (r >= 0.5) return RuggednessTier::smooth;
  if (r <= 0.2) return RuggednessTier::rugged;
  return RuggednessTier::moderate;
}

inline bool basin_is_easy(double proportion) { return proportion > kEasyBasinThreshold; }

inline std::string_view to_string(FdcTier t) {
  switch (t) {
    case FdcTier::guided: return "guided";
    case FdcTier::irregular: return "irregular";
    case FdcTier::deceptive: return "deceptive";
  }
  return "?";
}

inline std::string_view to_string(QualityTier t) {
  switch (t) {
    case QualityTier::high: return "high";
    case QualityTier::medium: return "medium";
    case QualityTier::low: return "low";
  }
  return "?";
}

inline std::string_view to_string(RuggednessTier t) {
  switch (t) {
    case RuggednessTier::smooth: return "smooth";
    case RuggednessTier::moderate: return "moderate";
    case RuggednessTier::rugged: return "rugged";
  }
  return "?";
}

// ----------------------------------------------------------------------------
// Full analysis

struct AnalysisSettings {
  NeighborhoodSettings neighborhood;
  std::uint64_t walk_seed = 0;
  std::uint64_t basin_seed = 0;
  BasinMode basin_mode = BasinMode::canonical;
  std::size_t lag = 1;
};

// Flat, serializable bundle of every landscape metric. A metric that could
// not be computed is absent and has an entry in `errors` under its name.
struct LandscapeReport {
  std::string system;
  std::string workload;
  Objective objective = Objective::minimize;
  std::size_t rows = 0;
  std::size_t options = 0;

  double target_avg_degree = 0;
  std::optional<std::size_t> radius;
  std::optional<double> average_degree;

  std::vector<std::string> global_optimum;  // rendered proxy configurations
  double global_optimum_performance = 0;

  std::optional<double> fdc;
  std::optional<FdcTier> fdc_tier;

  std::optional<std::size_t> local_optima_count;
  std::optional<std::size_t> isolated_count;
  std::optional<double> local_optima_proportion;  // l_p
  std::optional<double> local_optima_quality;     // l_q
  QualityStatus quality_status = QualityStatus::ok;
  std::optional<QualityTier> quality_tier;

  std::map<std::string, double> basin_proportions;  // rendered fixed point -> share
  std::optional<double> global_basin_proportion;
  std::optional<bool> global_basin_easy;

  std::optional<double> autocorrelation;
  std::optional<RuggednessTier> ruggedness_tier;
  std::size_t walk_length = 0;
  std::size_t lag = 1;

  std::uint64_t walk_seed = 0;
  std::uint64_t basin_seed = 0;
  BasinMode basin_mode = BasinMode::canonical;

  std::map<std::string, std::string> errors;

  friend bool operator==(const LandscapeReport&, const LandscapeReport&) = default;
};

inline LandscapeReport analyze(const Dataset& ds, const AnalysisSettings& settings = {}) {
  LandscapeReport rep;
  rep.system = ds.system();
  rep.workload = ds.workload();
  rep.objective = ds.objective();
  rep.rows = ds.size();
  rep.options = ds.dimension();
  rep.walk_seed = settings.walk_seed;
  rep.basin_seed = settings.basin_seed;
  rep.basin_mode = settings.basin_mode;
  rep.lag = settings.lag;
  rep.target_avg_degree = resolved_target(ds, settings.neighborhood);

  const auto proxy = best_configuration(ds);
  rep.global_optimum_performance = proxy.performance;
  for (auto r : proxy.rows) rep.global_optimum.push_back(ds.render(ds.config(r)));

  auto index = std::make_shared<const DistanceIndex>(ds);

  try {
    rep.fdc = fdc(ds, proxy);
    rep.fdc_tier = classify_fdc(*rep.fdc);
  } catch (const Error& e) {
    rep.errors["fdc"] = e.what();
  }

  std::optional<LandscapeGraph> graph;
  try {
    graph = build_neighborhood(ds, settings.neighborhood, index);
    rep.radius = graph->radius;
    rep.average_degree = graph->average_degree;
  } catch (const Error& e) {
    rep.errors["neighborhood"] = e.what();
    rep.errors["local_optima"] = "no neighborhood";
    rep.errors["basins"] = "no neighborhood";
  }

  if (graph) {
    const auto optima = find_local_optima(*graph);
    rep.local_optima_count = optima.members.size();
    rep.isolated_count = optima.isolated.size();
    rep.local_optima_proportion = optima.proportion;
    rep.quality_status = optima.quality_status;
    if (optima.quality_status == QualityStatus::no_optima) {
      rep.errors["local_optima_quality"] = "no strict local optima";
    } else {
      rep.local_optima_quality = optima.quality;
      rep.quality_tier = classify_quality(optima.quality);
    }
    const auto basins = compute_basins(*graph, settings.basin_mode, settings.basin_seed);
    for (auto [a, p] : basins.proportion) rep.basin_proportions[ds.render(ds.config(a))] = p;
    rep.global_basin_proportion = global_basin_proportion(basins, proxy);
    rep.global_basin_easy = basin_is_easy(*rep.global_basin_proportion);
  }

  try {
    const auto walk = random_walk(ds, *index, settings.walk_seed);
    rep.walk_length = walk.length();
    rep.autocorrelation = autocorrelation(walk, ds, settings.lag);
    rep.ruggedness_tier = classify_ruggedness(*rep.autocorrelation);
  } catch (const Error& e) {
    rep.errors["autocorrelation"] = e.what();
  }
  return rep;
}

}  // namespace landscope
