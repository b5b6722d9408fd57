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

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "fixtures.hpp"
#include "landscope/stats.hpp"
#include "landscope/synthetic.hpp"
#include "landscope/tuners.hpp"

using namespace landscope;
using fixtures::bits;

namespace {

const std::vector<std::string> kAllTuners = {"rs", "hc", "priority-hc", "ga", "priority-ga", "tpe"};

TunerSpec spec_for(const std::string& name) { return TunerSpec::parse(name, {"o0", "o1"}); }

void expect_well_formed(const Trajectory& t, const Dataset& ds, std::size_t budget, bool repeats_allowed) {
  ASSERT_FALSE(t.steps.empty());
  EXPECT_LE(t.steps.size(), budget);
  std::set<std::size_t> seen;
  double prev = 1.0;
  for (std::size_t k = 0; k < t.steps.size(); ++k) {
    const auto& s = t.steps[k];
    EXPECT_EQ(s.eval_index, k + 1);
    EXPECT_EQ(s.performance, ds.performance(s.row));
    EXPECT_EQ(s.configuration, ds.render(ds.config(s.row)));
    EXPECT_GE(s.regret, 0.0);
    EXPECT_LE(s.regret, prev);
    prev = s.regret;
    if (!repeats_allowed) EXPECT_TRUE(seen.insert(s.row).second) << t.tuner << " repeated row " << s.row;
  }
  EXPECT_EQ(t.final_regret, t.steps.back().regret);
}

}  // namespace

TEST(TunerSpec, NamesAndValidation) {
  for (const auto& n : kAllTuners) EXPECT_EQ(spec_for(n).name(), n);
  EXPECT_THROW(TunerSpec::parse("annealing"), InvalidArgument);
  EXPECT_THROW(TunerSpec::parse("priority-hc").validate(), InvalidArgument);
  auto s = TunerSpec::parse("ga");
  s.ga.population_size = 1;
  EXPECT_THROW(s.validate(), InvalidArgument);
  s.ga.population_size = 20;
  s.ga.mutation_probability = 1.5;
  EXPECT_THROW(s.validate(), InvalidArgument);
}

TEST(Evaluator, CachesAndCharges) {
  auto ds = fixtures::d3();
  Evaluator ev(ds, 2);
  EXPECT_TRUE(ev.evaluate_row(3).charged);
  EXPECT_FALSE(ev.evaluate_row(3).charged);
  EXPECT_EQ(ev.used(), 1u);
  ev.evaluate_row(4);
  EXPECT_TRUE(ev.exhausted());
  EXPECT_THROW(ev.evaluate_row(5), BudgetExhausted);
  EXPECT_NO_THROW(ev.evaluate_row(4));
  Evaluator charged(ds, 2, true);
  charged.evaluate_row(1);
  EXPECT_TRUE(charged.evaluate_row(1).charged);
  EXPECT_EQ(charged.log().size(), 2u);
  EXPECT_EQ(charged.evaluated_count(), 1u);
}

TEST(Evaluator, SnapsToNearestLowestIndex) {
  auto ds = fixtures::rows({{"100", 1}, {"111", 2}});
  Evaluator ev(ds, 5);
  auto r = ev.evaluate(bits("101"));
  EXPECT_EQ(r.row, 0u);
  EXPECT_TRUE(r.snapped);
  EXPECT_EQ(ev.snaps(), 1u);
  EXPECT_FALSE(ev.evaluate(bits("111")).snapped);
}

TEST(Regret, NormalizedAndRaw) {
  auto ds = fixtures::d3();
  EXPECT_EQ(regret_of(ds, 0), 0.0);
  EXPECT_DOUBLE_EQ(regret_of(ds, 7), 1.0);
  EXPECT_DOUBLE_EQ(regret_of(ds, 3.5), 0.5);
  EXPECT_DOUBLE_EQ(regret_of(ds, 3.5, RegretMode::raw), 3.5);
  auto mx = fixtures::d3(Objective::maximize);
  EXPECT_EQ(regret_of(mx, 7), 0.0);
  EXPECT_DOUBLE_EQ(regret_of(mx, 0), 1.0);
}

TEST(Tuners, TrajectoriesAreWellFormed) {
  auto ds = synthetic::iid_cube(8, 5);
  for (const auto& name : kAllTuners) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto t = run_tuner(spec_for(name), ds, 60, seed);
      expect_well_formed(t, ds, 60, name == "rs");
      EXPECT_EQ(t.tuner, name);
      EXPECT_EQ(t.seed, seed);
      EXPECT_EQ(run_tuner(spec_for(name), ds, 60, seed), t) << name;
    }
  }
}

TEST(Tuners, SpendWholeBudgetWhenSpaceIsLarge) {
  auto ds = synthetic::iid_cube(10, 1);
  for (const auto& name : kAllTuners) EXPECT_EQ(run_tuner(spec_for(name), ds, 80, 2).steps.size(), 80u) << name;
}

TEST(Tuners, StopWhenSpaceIsExhausted) {
  auto ds = fixtures::d3();
  for (const auto& name : {"hc", "ga", "tpe"}) {
    auto spec = TunerSpec::parse(name);
    spec.ga.population_size = 4;
    auto t = run_tuner(spec, ds, 50, 1);
    EXPECT_LE(t.steps.size(), ds.size()) << name;
    EXPECT_EQ(t.final_regret, 0.0) << name;
  }
}

TEST(Tuners, RandomSearchHitRateMatchesBinomial) {
  auto ds = synthetic::iid_cube(6, 8);
  const std::size_t budget = 20, trials = 1000;
  const double p = 1.0 - std::pow(1.0 - 1.0 / double(ds.size()), double(budget));
  std::size_t hits = 0;
  for (std::uint64_t seed = 0; seed < trials; ++seed) hits += run_tuner(TunerSpec::parse("rs"), ds, budget, seed).final_regret == 0;
  const double rate = double(hits) / double(trials), se = std::sqrt(p * (1 - p) / double(trials));
  EXPECT_NEAR(rate, p, 3 * se);
}

TEST(Tuners, HillClimbingBeatsRandomSearchOnLinear) {
  auto ds = synthetic::cube(10, synthetic::linear({9, 8, 7, 6, 5, 4, 3, 2, 1, 0.5}));
  std::vector<double> hc, rs;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    hc.push_back(run_tuner(TunerSpec::parse("hc"), ds, 40, seed).final_regret);
    rs.push_back(run_tuner(TunerSpec::parse("rs"), ds, 40, seed).final_regret);
  }
  EXPECT_LT(stats::mean(hc), stats::mean(rs));
}

TEST(Genetic, BudgetBelowPopulation) {
  auto ds = synthetic::iid_cube(6, 1);
  try {
    run_tuner(TunerSpec::parse("ga"), ds, 10, 1);
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_EQ(std::string(e.what()), "budget below one generation");
  }
}

TEST(Genetic, GenerationCount) {
  auto ds = synthetic::iid_cube(10, 4);
  Evaluator ev(ds, 80);
  Rng rng(3);
  auto out = detail::run_genetic(ev, rng, TunerSpec::parse("ga"));
  EXPECT_EQ(out.generations, 4u);
  EXPECT_EQ(ev.used(), 80u);
  EXPECT_EQ(out.final_population.size(), 20u);
}

TEST(Genetic, ElitismKeepsBest) {
  auto ds = synthetic::iid_cube(8, 6);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Evaluator ev(ds, 100);
    Rng rng(seed);
    auto out = detail::run_genetic(ev, rng, TunerSpec::parse("ga"));
    double best_seen = ev.log().front().performance;
    for (const auto& r : ev.log()) best_seen = std::min(best_seen, r.performance);
    double best_pop = ds.performance(out.final_population.front());
    for (auto row : out.final_population) best_pop = std::min(best_pop, ds.performance(row));
    EXPECT_EQ(best_pop, best_seen);
  }
}

TEST(Dynamic, Errors) {
  auto a = synthetic::iid_cube(6, 1), b = synthetic::iid_cube(5, 1);
  EXPECT_THROW(run_dynamic(TunerSpec::parse("ga"), {a}, DynamicMode::transfer, 40, 1), InvalidArgument);
  EXPECT_THROW(run_dynamic(TunerSpec::parse("hc"), {a, a}, DynamicMode::transfer, 40, 1), InvalidArgument);
  EXPECT_THROW(run_dynamic(TunerSpec::parse("ga"), {a, b}, DynamicMode::transfer, 40, 1), DataError);
  EXPECT_THROW(parse_dynamic_mode("sometimes"), InvalidArgument);
}

TEST(Dynamic, TransferCarriesBestAcrossIdenticalWorkloads) {
  auto a = synthetic::iid_cube(9, 2);
  auto b = synthetic::shifted(a, 0.0, "w1"), c = synthetic::shifted(a, 0.0, "w2");
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto run = run_dynamic(TunerSpec::parse("ga"), {a, b, c}, DynamicMode::transfer, 40, seed);
    ASSERT_EQ(run.per_workload.size(), 3u);
    for (std::size_t k = 0; k < 3; ++k) {
      EXPECT_EQ(run.per_workload[k].workload_position, k + 1);
      EXPECT_EQ(run.per_workload[k].tuner, "transfer-ga");
    }
    for (std::size_t k = 1; k < 3; ++k) EXPECT_LE(run.per_workload[k].final_regret, run.per_workload[k - 1].final_regret);
    auto restart = run_dynamic(TunerSpec::parse("ga"), {a, b, c}, DynamicMode::restart, 40, seed);
    EXPECT_EQ(restart.workload_order, run.workload_order);
    EXPECT_EQ(restart.per_workload[0].steps, run.per_workload[0].steps);
    EXPECT_EQ(restart.per_workload[1].tuner, "restarted-ga");
  }
}
