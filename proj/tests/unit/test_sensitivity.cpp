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

#include "fixtures.hpp"
#include "landscope/sensitivity.hpp"
#include "landscope/synthetic.hpp"

using namespace landscope;

namespace {

SensitivitySettings small_subsets() {
  SensitivitySettings s;
  s.min_subset_rows = 2;
  return s;
}

Dataset with_performance(const Dataset& ds, const std::function<double(double)>& f) {
  std::vector<Row> rows = ds.rows();
  for (auto& r : rows) r.performance = f(r.performance);
  return Dataset::create(ds.system(), ds.workload(), ds.objective(), ds.options(), rows);
}

}  // namespace

TEST(Partition, CubeSplitsOnFirstOption) {
  auto ds = fixtures::d3();
  auto parts = partition_by_option(ds, "o0", small_subsets());
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].value, "0");
  EXPECT_EQ(parts[1].value, "1");
  EXPECT_EQ(parts[0].subset->performances(), (std::vector<double>{0, 1, 2, 3}));
  EXPECT_EQ(parts[1].subset->performances(), (std::vector<double>{4, 5, 6, 7}));
  EXPECT_EQ(parts[0].subset->dimension(), 2u);
  EXPECT_FALSE(parts[0].skipped);
}

TEST(Partition, MiddleOptionFitnessSets) {
  auto parts = partition_by_option(fixtures::d3(), "o1", small_subsets());
  EXPECT_EQ(parts[0].subset->performances(), (std::vector<double>{0, 1, 4, 5}));
  EXPECT_EQ(parts[1].subset->performances(), (std::vector<double>{2, 3, 6, 7}));
}

TEST(Partition, SmallSubsetsAreSkipped) {
  auto parts = partition_by_option(fixtures::d3(), "o2");
  for (const auto& p : parts) {
    EXPECT_TRUE(p.skipped);
    EXPECT_EQ(p.reason, "insufficient rows (4 < 8)");
  }
  auto ds = fixtures::rows({{"00", 1}, {"01", 2}, {"10", 3}});
  auto tiny = partition_by_option(ds, "o0", small_subsets());
  EXPECT_FALSE(tiny[0].skipped);
  EXPECT_TRUE(tiny[1].skipped);
  EXPECT_EQ(tiny[1].rows, 1u);
}

TEST(Partition, ConstantOptionHasNothingToPartition) {
  auto ds = fixtures::rows({{"00", 1}, {"01", 2}});
  try {
    partition_by_option(ds, "o0");
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("nothing to partition"), std::string::npos);
  }
  EXPECT_THROW(partition_by_option(ds, "zzz"), DataError);
}

TEST(Rsd, Fixtures) {
  const std::vector<double> same = {0.5, 0.5}, spread = {0.4, 0.6};
  EXPECT_NEAR(*relative_std_percent(same).percent, 0.0, 1e-12);
  EXPECT_NEAR(*relative_std_percent(spread).percent, 100.0 * std::sqrt(0.02) / 0.5, 1e-9);
  EXPECT_NEAR(*relative_std_percent(spread).percent, 28.28, 0.01);
  const std::vector<double> centered = {-0.3, 0.3};
  EXPECT_TRUE(relative_std_percent(centered).unstable);
}

TEST(Sensitivity, IndependentOptionHasZeroRsd) {
  // o0 does not affect fitness, so both subsets are identical landscapes.
  auto ds = synthetic::cube(6, [](const std::vector<int>& b) {
    return 1.0 + b[1] * 3 + b[2] * 0.5 + b[3] * b[4] * 2 + b[5] * 0.25;
  });
  auto rec = option_sensitivity(ds, "o0");
  ASSERT_TRUE(rec.rsd);
  EXPECT_NEAR(*rec.rsd, 0.0, 1e-12);
  EXPECT_FALSE(rec.significant);
}

TEST(Sensitivity, InvariantUnderPositiveScaling) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto ds = synthetic::iid_cube(7, seed);
    auto scaled = with_performance(ds, [](double f) { return 3.5 * f + 2.0; });
    for (const auto& opt : ds.options()) {
      auto a = option_sensitivity(ds, opt.name), b = option_sensitivity(scaled, opt.name);
      ASSERT_EQ(a.rsd.has_value(), b.rsd.has_value());
      if (a.rsd) EXPECT_NEAR(*a.rsd, *b.rsd, 1e-6 * std::max(1.0, *a.rsd));
      EXPECT_EQ(a.significant, b.significant);
    }
  }
}

TEST(Sensitivity, InvariantUnderValueRelabeling) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto ds = synthetic::iid_cube(7, seed);
    std::vector<Row> flipped = ds.rows();
    for (auto& r : flipped) r.config.values[0] ^= 1u;
    auto ds2 = Dataset::create(ds.system(), ds.workload(), ds.objective(), ds.options(), flipped);
    auto a = option_sensitivity(ds, "o0"), b = option_sensitivity(ds2, "o0");
    ASSERT_TRUE(a.rsd && b.rsd);
    EXPECT_NEAR(*a.rsd, *b.rsd, 1e-9);
  }
}

TEST(Sensitivity, ReportMatchesSingleOptionForOneWorkload) {
  auto ds = synthetic::iid_cube(7, 3);
  SensitivitySettings s;
  s.seed = 9;
  auto rep = sensitivity_report({ds}, s);
  EXPECT_FALSE(rep.median_aggregated);
  ASSERT_EQ(rep.records.size(), 7u);
  for (const auto& rec : rep.records) {
    auto single = option_sensitivity(ds, rec.option, s);
    EXPECT_EQ(rec.partition_autocorrelations, single.partition_autocorrelations);
    EXPECT_EQ(rec.rsd, single.rsd);
    EXPECT_EQ(rec.significant, single.significant);
  }
  EXPECT_EQ(sensitivity_report({ds}, s), rep);
}

TEST(Sensitivity, MedianAcrossWorkloads) {
  auto a = synthetic::iid_cube(6, 1), b = synthetic::iid_cube(6, 2);
  auto rep = sensitivity_report({a, b, synthetic::shifted(a, 10.0, "w2")});
  EXPECT_TRUE(rep.median_aggregated);
  EXPECT_EQ(rep.workloads.size(), 3u);
  // Shifting fitness does not change autocorrelation, so the median per
  // subset equals the value from the duplicated workload.
  for (const auto& rec : rep.records) {
    auto single = option_sensitivity(a, rec.option);
    ASSERT_EQ(rec.partition_autocorrelations.size(), single.partition_autocorrelations.size());
    for (std::size_t i = 0; i < single.partition_autocorrelations.size(); ++i)
      EXPECT_NEAR(rec.partition_autocorrelations[i], single.partition_autocorrelations[i], 1e-9);
  }
}

TEST(Sensitivity, SchemaMismatchIsDataError) {
  auto a = synthetic::iid_cube(5, 1), b = synthetic::iid_cube(6, 1);
  EXPECT_THROW(sensitivity_report({a, b}), DataError);
  EXPECT_THROW(sensitivity_report({}), InvalidArgument);
}

TEST(Sensitivity, InsufficientPartitions) {
  try {
    option_sensitivity(fixtures::d3(), "o0");
    FAIL();
  } catch (const UndefinedMetric& e) {
    EXPECT_NE(std::string(e.what()).find("insufficient partitions"), std::string::npos);
  }
  auto rep = sensitivity_report({fixtures::d3()});
  for (const auto& rec : rep.records) {
    EXPECT_FALSE(rec.error.empty());
    EXPECT_FALSE(rec.rsd);
    EXPECT_EQ(rec.skipped.size(), 2u);
  }
}
