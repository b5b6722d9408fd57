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

// Synthetic landscapes over binary options: exhaustive cubes, classic test
// functions and seeded subsamples.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "landscope/dataset.hpp"
#include "landscope/rng.hpp"

namespace landscope::synthetic {

using BitFitness = std::function<double(const std::vector<int>&)>;

inline std::vector<OptionSpec> binary_options(std::size_t n, const std::string& prefix = "o") {
  std::vector<OptionSpec> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back({prefix + std::to_string(i), OptionKind::boolean, {"0", "1"}});
  return out;
}

// Bits of row `index`, most significant option first.
inline std::vector<int> bits_of(std::uint64_t index, std::size_t n) {
  std::vector<int> b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = static_cast<int>((index >> (n - 1 - i)) & 1u);
  return b;
}

// All 2^n configurations, in binary counting order.
inline Dataset cube(std::size_t n, const BitFitness& f, Objective objective = Objective::minimize,
                    std::string system = "synthetic", std::string workload = "w0") {
  std::vector<Row> rows;
  rows.reserve(std::size_t{1} << n);
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
    auto b = bits_of(k, n);
    Configuration c;
    for (int x : b) c.values.push_back(static_cast<std::uint32_t>(x));
    rows.push_back({std::move(c), f(b)});
  }
  return Dataset::create(std::move(system), std::move(workload), objective, binary_options(n), std::move(rows));
}

// Independent uniform fitness per configuration.
inline Dataset iid_cube(std::size_t n, std::uint64_t seed, Objective objective = Objective::minimize) {
  std::vector<double> values(std::size_t{1} << n);
  Rng rng(seed);
  for (auto& v : values) v = rng.uniform();
  auto index_of = [n](const std::vector<int>& b) {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < n; ++i) k = (k << 1) | static_cast<std::uint64_t>(b[i]);
    return k;
  };
  return cube(n, [&](const std::vector<int>& b) { return values[index_of(b)]; }, objective);
}

// Minimization: sum of weighted set bits, unique optimum at all zeros.
inline BitFitness linear(std::vector<double> weights) {
  return [w = std::move(weights)](const std::vector<int>& b) {
    double s = 0;
    for (std::size_t i = 0; i < b.size(); ++i) s += w[i] * b[i];
    return s;
  };
}

// Concatenated deceptive traps of width k for minimization. Within a block
// with u set bits the cost is 0 when u == k and (1 + u) / k otherwise, so
// local descent drifts to the all-zeros block.
inline BitFitness traps(std::size_t k) {
  return [k](const std::vector<int>& b) {
    double s = 0;
    for (std::size_t start = 0; start + k <= b.size(); start += k) {
      std::size_t u = 0;
      for (std::size_t i = start; i < start + k; ++i) u += static_cast<std::size_t>(b[i]);
      s += u == k ? 0.0 : static_cast<double>(1 + u) / static_cast<double>(k);
    }
    return s;
  };
}

// NK landscape: bit i contributes a uniform table value indexed by itself
// and the next k bits (cyclic). Fitness is the mean contribution.
inline Dataset nk(std::size_t n, std::size_t k, std::uint64_t seed, Objective objective = Objective::minimize) {
  Rng rng(seed);
  std::vector<std::vector<double>> tables(n, std::vector<double>(std::size_t{1} << (k + 1)));
  for (auto& t : tables) for (auto& v : t) v = rng.uniform();
  return cube(n, [&](const std::vector<int>& b) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t key = 0;
      for (std::size_t j = 0; j <= k; ++j) key = (key << 1) | static_cast<std::size_t>(b[(i + j) % n]);
      s += tables[i][key];
    }
    return s / static_cast<double>(n);
  }, objective);
}

// Keeps round(fraction * size) rows chosen uniformly without replacement,
// preserving row order, and never fewer than two.
inline Dataset subsample(const Dataset& ds, double fraction, std::uint64_t seed) {
  std::size_t keep = static_cast<std::size_t>(fraction * static_cast<double>(ds.size()) + 0.5);
  keep = std::clamp<std::size_t>(keep, 2, ds.size());
  std::vector<std::size_t> idx(ds.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  Rng rng(seed);
  rng.shuffle(idx);
  idx.resize(keep);
  std::sort(idx.begin(), idx.end());
  std::vector<Row> rows;
  for (auto i : idx) rows.push_back(ds.rows()[i]);
  return Dataset::create(ds.system(), ds.workload(), ds.objective(), ds.options(), std::move(rows));
}

// Same configurations with performance shifted by `offset`.
inline Dataset shifted(const Dataset& ds, double offset, std::string workload) {
  std::vector<Row> rows = ds.rows();
  for (auto& r : rows) r.performance += offset;
  return Dataset::create(ds.system(), std::move(workload), ds.objective(), ds.options(), std::move(rows));
}

}  // namespace landscope::synthetic
