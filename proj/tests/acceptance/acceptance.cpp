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

// Acceptance harness. Prints one PASS/FAIL/SKIP line per criterion and exits
// non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "landscope/landscope.hpp"

using namespace landscope;
namespace fs = std::filesystem;

namespace {

// Tolerances and sizes.
constexpr double kFixtureTol = 1e-9;
constexpr double kFdcTol = 1e-4;
constexpr double kQualityTol = 1e-3;
constexpr double kBasinConstTol = 1e-4;
constexpr double kSumTol = 1e-12;
constexpr double kAgreementTol = 0.002;
constexpr double kInflationFactor = 10.0;
constexpr double kRsdThreshold = 5.0;
constexpr std::size_t kSeeds = 30;
constexpr std::size_t kBudget = 80;

struct Outcome {
  bool pass = true;
  bool skipped = false;
  std::string detail;
};

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      if (!failures_.empty()) failures_ += "; ";
      failures_ += what;
    }
  }
  void note(const std::string& s) {
    if (!notes_.empty()) notes_ += ", ";
    notes_ += s;
  }
  Outcome done() const { return {pass_, false, pass_ ? notes_ : failures_ + (notes_.empty() ? "" : " [" + notes_ + "]")}; }

 private:
  bool pass_ = true;
  std::string failures_, notes_;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// All-pairs local optimum check, no graph.
std::vector<std::size_t> brute_force_optima(const Dataset& ds, std::size_t eps) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    bool opt = true;
    for (std::size_t j = 0; j < ds.size() && opt; ++j) {
      if (i == j) continue;
      std::size_t d = 0;
      for (std::size_t k = 0; k < ds.dimension(); ++k) d += ds.config(i).values[k] != ds.config(j).values[k];
      if (d <= eps && !(ds.performance(i) < ds.performance(j))) opt = false;
    }
    if (opt) out.push_back(i);
  }
  return out;
}

double naive_pearson(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
  mx /= double(x.size());
  my /= double(y.size());
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

// Two-sided exact rank-sum p over every rank subset.
double enumerated_p(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> pooled = a;
  pooled.insert(pooled.end(), b.begin(), b.end());
  std::vector<double> sorted = pooled;
  std::sort(sorted.begin(), sorted.end());
  double w = 0;
  for (double x : a) w += double(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()) + 1;
  const std::size_t n = pooled.size();
  double total = 0, le = 0, ge = 0;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (std::size_t(__builtin_popcount(m)) != a.size()) continue;
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) if (m >> i & 1u) s += double(i + 1);
    total += 1;
    le += s <= w;
    ge += s >= w;
  }
  return std::min(1.0, 2 * std::min(le, ge) / total);
}

// -------------------------------------------------------------------------

Outcome ac1_local_optima_oracle() {
  Check c;
  std::size_t landscapes = 0, mismatches = 0;
  double worst_sum = 0;
  for (std::size_t n = 4; n <= 12; ++n) {
    for (std::uint64_t s = 0; s < 6; ++s) {
      auto ds = synthetic::iid_cube(n, 7919 * n + s);
      auto g = build_neighborhood(ds);
      for (std::size_t eps : {g.radius, g.radius + 1}) {
        auto graph = eps == g.radius ? g : build_graph(ds, eps);
        if (find_local_optima(graph).members != brute_force_optima(ds, eps)) ++mismatches;
        for (auto mode : {BasinMode::canonical, BasinMode::randomized}) {
          auto b = compute_basins(graph, mode, s);
          bool total = b.assignment.size() == ds.size();
          double sum = 0;
          for (auto [a, p] : b.proportion) sum += p;
          worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
          c.expect(total, "basin assignment not total");
        }
      }
      ++landscapes;
    }
  }
  c.expect(landscapes >= 50, "fewer than 50 landscapes");
  c.expect(mismatches == 0, std::to_string(mismatches) + " optima mismatches");
  c.expect(worst_sum <= kSumTol, "basin sum off by " + num(worst_sum));
  c.note(std::to_string(landscapes) + " landscapes n=4..12, max |sum-1|=" + num(worst_sum));
  return c.done();
}

Outcome ac2_metric_fixtures() {
  Check c;
  auto d3 = synthetic::cube(3, synthetic::linear({4, 2, 1}), Objective::minimize, "toy", "d3");
  std::vector<Row> rb;
  const double fb[] = {0, 5, 5, 5, 5, 5, 5, 1};
  for (std::size_t k = 0; k < 8; ++k) rb.push_back({d3.config(k), fb[k]});
  auto d3b = Dataset::create("toy", "d3b", Objective::minimize, d3.options(), rb);

  const auto proxy = best_configuration(d3);
  const double v = fdc(d3, proxy);
  std::vector<double> f = d3.performances(), d;
  for (auto x : distances_to_nearest(d3, proxy)) d.push_back(double(x));
  c.expect(near(v, 0.8819, kFdcTol), "fdc " + num(v));
  c.expect(near(v, naive_pearson(f, d), kFixtureTol), "fdc vs naive pearson");

  const std::vector<double> up = {1, 2, 3, 4, 5}, alt = {1, 0, 1, 0, 1};
  const double r_up = autocorrelation(up, 1), r_alt = autocorrelation(alt, 1);
  c.expect(near(r_up, 2.0 / 3.0, kFixtureTol), "r(up) " + num(r_up));
  c.expect(near(r_alt, -12.0 / 13.0, kFixtureTol), "r(alt) " + num(r_alt));

  auto lo = find_local_optima(build_neighborhood(d3));
  auto lob = find_local_optima(build_neighborhood(d3b));
  c.expect(lo.proportion == 0.125 && lo.quality == 1.0, "D3 lp/lq " + num(lo.proportion) + "/" + num(lo.quality));
  c.expect(lob.proportion == 0.25, "D3b lp " + num(lob.proportion));
  c.expect(near(lob.quality, 0.871, kQualityTol), "D3b lq " + num(lob.quality));
  c.expect(near(easy_basin_threshold_exact(), 0.2057, kBasinConstTol), "basin constant");
  c.note("fdc=" + num(v) + " r=" + num(r_up) + "/" + num(r_alt) + " D3b lq=" + num(lob.quality) +
         " basin=" + num(easy_basin_threshold_exact()));
  return c.done();
}

Outcome ac3_adaptive_neighborhood() {
  Check c;
  std::vector<double> err_adaptive, err_fixed, inflation;
  std::size_t iid_wins = 0;
  std::vector<double> iid_inflation;
  for (std::uint64_t s = 0; s < kSeeds; ++s) {
    // NK with k = 2: a moderately rugged landscape with few optima.
    auto full = synthetic::nk(10, 2, 5000 + s);
    const double truth = find_local_optima(build_graph(full, 1)).proportion;
    auto sub = synthetic::subsample(full, 0.05, 9000 + s);
    const double adaptive = find_local_optima(build_neighborhood_best_effort(sub)).proportion;
    const double fixed = find_local_optima(build_graph(sub, 1)).proportion;
    err_adaptive.push_back(std::abs(adaptive - truth));
    err_fixed.push_back(std::abs(fixed - truth));
    inflation.push_back(fixed / truth);

    // Reported only: iid fitness caps the possible inflation near n + 1.
    auto iid = synthetic::iid_cube(10, 6000 + s);
    const double t2 = find_local_optima(build_graph(iid, 1)).proportion;
    auto sub2 = synthetic::subsample(iid, 0.05, 9000 + s);
    const double a2 = find_local_optima(build_neighborhood_best_effort(sub2)).proportion;
    const double f2 = find_local_optima(build_graph(sub2, 1)).proportion;
    iid_wins += std::abs(a2 - t2) < std::abs(f2 - t2);
    iid_inflation.push_back(f2 / t2);
  }
  const double ma = stats::median(err_adaptive), mf = stats::median(err_fixed), mi = stats::median(inflation);
  c.expect(ma < mf, "median error adaptive " + num(ma) + " >= fixed " + num(mf));
  c.expect(mi >= kInflationFactor, "median inflation " + num(mi));
  c.note("NK(10,2) median |err| adaptive=" + num(ma) + " fixed=" + num(mf) + " inflation=" + num(mi) + "x");
  c.note("iid: adaptive closer in " + std::to_string(iid_wins) + "/30, inflation=" + num(stats::median(iid_inflation)) + "x");
  return c.done();
}

Outcome ac4_statistics() {
  Check c;
  const std::vector<double> a = {1, 2, 3}, b = {4, 5, 6};
  c.expect(near(stats::wilcoxon_rank_sum(a, b), 0.1, kFixtureTol), "wilcoxon fixture");
  Rng rng(404);
  std::size_t cases = 0, bad = 0;
  while (cases < 200) {
    std::vector<double> x(1 + rng.below(6)), y(1 + rng.below(6));
    for (auto& v : x) v = rng.uniform();
    for (auto& v : y) v = rng.uniform();
    ++cases;
    if (!near(stats::wilcoxon_rank_sum(x, y), enumerated_p(x, y), kFixtureTol)) ++bad;
  }
  c.expect(bad == 0, std::to_string(bad) + " exact/enumeration mismatches");
  const std::vector<double> two = {2, 2}, one = {1, 1}, p = {1, 2};
  c.expect(stats::a12(two, one, stats::Orientation::higher_better) == 1.0, "a12 dominance");
  c.expect(stats::a12(p, p, stats::Orientation::higher_better) == 0.5, "a12 equality");
  bool sym = true;
  for (int t = 0; t < 100; ++t) {
    std::vector<double> x(1 + rng.below(9)), y(1 + rng.below(9));
    for (auto& v : x) v = std::round(rng.uniform() * 4);
    for (auto& v : y) v = std::round(rng.uniform() * 4);
    sym = sym && near(stats::a12(x, y, stats::Orientation::higher_better) + stats::a12(y, x, stats::Orientation::higher_better), 1.0, kFixtureTol);
  }
  c.expect(sym, "a12 symmetry");
  const std::vector<double> sx = {1, 2, 3}, sy = {3, 1, 2};
  c.expect(near(stats::spearman(sx, sy).rho, -0.5, kFixtureTol), "spearman fixture");
  const std::vector<std::string> la = {"y", "y", "n", "n"}, lb = {"y", "n", "n", "n"};
  c.expect(near(stats::cohens_kappa(la, lb).kappa, 0.5, kFixtureTol), "kappa fixture");
  const double overall = stats::overall_agreement(0.7059, {0.6870, 0.7513, 0.7357}).overall;
  c.expect(near(overall, 0.718, kAgreementTol), "overall agreement " + num(overall));
  c.note(std::to_string(cases) + " enumeration cases, overall kappa=" + num(overall));
  return c.done();
}

Outcome ac5_tuner_directionality() {
  Check c;
  auto smooth = synthetic::cube(10, synthetic::linear({10, 9, 8, 7, 6, 5, 4, 3, 2, 1}), Objective::minimize, "synthetic", "linear");
  auto trap = synthetic::cube(10, synthetic::traps(5), Objective::minimize, "synthetic", "traps");
  std::vector<double> hc_evals, rs_evals, hc_trap, rs_trap;
  const auto hc = TunerSpec::parse("hc"), rs = TunerSpec::parse("rs");
  for (std::uint64_t s = 0; s < kSeeds; ++s) {
    auto censored = [](const Trajectory& t) { return double(t.evaluations_to_optimum().value_or(kBudget + 1)); };
    hc_evals.push_back(censored(run_tuner(hc, smooth, kBudget, derive_seed(s, "hc", 0))));
    rs_evals.push_back(censored(run_tuner(rs, smooth, kBudget, derive_seed(s, "rs", 0))));
    hc_trap.push_back(run_tuner(hc, trap, kBudget, derive_seed(s, "hc", 1)).final_regret);
    rs_trap.push_back(run_tuner(rs, trap, kBudget, derive_seed(s, "rs", 1)).final_regret);
  }
  const auto v_smooth = stats::verdict(hc_evals, rs_evals, stats::Orientation::lower_better);
  const auto v_trap = stats::verdict(rs_trap, hc_trap, stats::Orientation::lower_better);
  c.expect(stats::median(hc_evals) < stats::median(rs_evals), "median evaluations HC >= RS");
  c.expect(v_smooth.label == stats::VerdictLabel::better, "smooth verdict " + std::string(stats::to_string(v_smooth.label)));
  c.expect(v_trap.label != stats::VerdictLabel::worse, "trap verdict worse");
  c.note("smooth evals median HC=" + num(stats::median(hc_evals)) + " RS=" + num(stats::median(rs_evals)) + " (" +
         std::string(stats::to_string(v_smooth.label)) + ", p=" + num(v_smooth.p_value) + ")");
  c.note("trap regret median RS=" + num(stats::median(rs_trap)) + " HC=" + num(stats::median(hc_trap)) + " (" +
         std::string(stats::to_string(v_trap.label)) + ", p=" + num(v_trap.p_value) + ")");
  return c.done();
}

// o0 switches the remaining bits between a smooth and an iid-random fitness;
// o1 is a dummy that fitness ignores.
Dataset switched_landscape(std::uint64_t seed) {
  constexpr std::size_t n = 10;
  Rng rng(seed);
  std::vector<double> weights(n), noise(std::size_t{1} << (n - 2));
  for (auto& w : weights) w = 0.5 + rng.uniform();
  for (auto& v : noise) v = rng.uniform() * 8.0;
  return synthetic::cube(n, [&](const std::vector<int>& b) {
    if (b[0] == 0) {
      double s = 0;
      for (std::size_t i = 2; i < n; ++i) s += weights[i] * b[i];
      return s;
    }
    std::size_t key = 0;
    for (std::size_t i = 2; i < n; ++i) key = (key << 1) | std::size_t(b[i]);
    return noise[key];
  }, Objective::minimize, "synthetic", "switched");
}

Outcome ac6_priority_validation() {
  Check c;
  std::vector<double> rsd_switch, rsd_dummy, vanilla, priority;
  std::size_t flagged_total = 0;
  for (std::uint64_t s = 0; s < kSeeds; ++s) {
    auto ds = switched_landscape(100 + s);
    SensitivitySettings ss;
    ss.seed = s;
    ss.rsd_threshold = kRsdThreshold;
    auto rep = sensitivity_report({ds}, ss);
    std::vector<std::string> flagged;
    for (const auto& r : rep.records) {
      if (r.option == "o0") rsd_switch.push_back(r.rsd.value_or(0));
      if (r.option == "o1") rsd_dummy.push_back(r.rsd.value_or(0));
      if (r.significant) flagged.push_back(r.option);
    }
    flagged_total += flagged.size();
    const auto pspec = flagged.empty() ? TunerSpec::parse("hc") : TunerSpec::parse("priority-hc", flagged);
    vanilla.push_back(run_tuner(TunerSpec::parse("hc"), ds, kBudget, derive_seed(s, "hc", 0)).final_regret);
    priority.push_back(run_tuner(pspec, ds, kBudget, derive_seed(s, "priority-hc", 0)).final_regret);
  }
  const double m_switch = stats::median(rsd_switch), m_dummy = stats::median(rsd_dummy);
  c.expect(m_switch >= kRsdThreshold, "switch option median RSD " + num(m_switch));
  c.expect(m_dummy < kRsdThreshold, "dummy option median RSD " + num(m_dummy));
  c.expect(stats::median(priority) <= stats::median(vanilla), "priority HC median regret above vanilla");
  c.note("median RSD switch=" + num(m_switch) + "% dummy=" + num(m_dummy) + "%, mean flagged=" +
         num(double(flagged_total) / double(kSeeds)));
  c.note("median regret priority=" + num(stats::median(priority)) + " vanilla=" + num(stats::median(vanilla)));
  return c.done();
}

Outcome ac7_transfer_validation() {
  Check c;
  auto w0 = synthetic::nk(10, 2, 77);
  auto w1 = synthetic::shifted(w0, 3.0, "w1");
  std::vector<Trajectory> transfer, restart;
  bool exact_budget = true;
  const auto ga = TunerSpec::parse("ga");
  for (std::uint64_t s = 0; s < kSeeds; ++s) {
    for (auto mode : {DynamicMode::transfer, DynamicMode::restart}) {
      auto run = run_dynamic(ga, {w0, w1}, mode, kBudget, derive_seed(s, "dynamic", 0));
      for (auto& t : run.per_workload) {
        exact_budget = exact_budget && t.steps.size() == kBudget;
        (mode == DynamicMode::transfer ? transfer : restart).push_back(std::move(t));
      }
    }
  }
  auto table = compare_trajectories(transfer, restart, "transfer-ga", "restarted-ga");
  for (const auto& row : table.rows) {
    c.expect(row.verdict.label != stats::VerdictLabel::worse, row.workload + " verdict worse");
    c.note(row.workload + ": " + std::string(stats::to_string(row.verdict.label)) + " (mean " + num(row.mean_a) +
           " vs " + num(row.mean_b) + ", p=" + num(row.verdict.p_value) + ")");
  }
  c.expect(exact_budget, "a dynamic run did not spend exactly 80 evaluations");
  return c.done();
}

// Subprocess determinism of every subcommand, across --jobs values.
std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome ac8_determinism(const std::string& cli) {
  Check c;
  if (cli.empty() || !fs::exists(cli)) return {false, false, "CLI binary not found (pass --cli)"};
  const fs::path dir = fs::temp_directory_path() / "landscope_acceptance_ac8";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto at = [&](const std::string& name) { return (dir / name).string(); };
  auto w0 = synthetic::nk(7, 2, 1);
  save_dataset(w0, at("w0.csv"), at("w0.meta.json"));
  save_dataset(synthetic::shifted(w0, 1.0, "w1"), at("w1.csv"), at("w1.meta.json"));
  std::ofstream(at("h1.csv")) << "option,label\no0,F1\no1,R1\no2,R3\no3,F2\n";
  std::ofstream(at("h2.csv")) << "option,label\no0,F1\no1,R1\no2,R2\no3,F2\n";
  std::ofstream(at("m.csv")) << "option,label\no0,F1\no1,R3\no2,R3\no3,F2\n";
  const std::string data = " --dataset " + at("w0.csv") + " --dataset " + at("w1.csv");

  struct Command {
    std::string name, args, out;
  };
  const std::vector<Command> commands = {
      {"analyze", "analyze" + data + " --seed 3", "analyze.json"},
      {"sensitivity", "sensitivity" + data + " --seed 3 --min-subset-rows 4", "sensitivity.json"},
      {"tune", "tune" + data + " --tuner rs --tuner hc --tuner ga --tuner tpe --tuner priority-hc --repeats 5 --budget 30 --seed 3",
       "tune.csv"},
      {"dynamic", "dynamic" + data + " --repeats 4 --budget 30 --population 10 --seed 3", "dynamic.json"},
      {"agreement", "agreement --human " + at("h1.csv") + " --human " + at("h2.csv") + " --llm " + at("m.csv"),
       "agreement.md"},
  };
  std::size_t compared = 0;
  for (const auto& cmd : commands) {
    std::vector<std::string> outputs;
    for (const char* jobs : {"1", "1", "4"}) {
      const std::string target = at(std::string("j") + jobs + "_" + cmd.out);
      fs::remove(target);
      const std::string line = cli + " " + cmd.args + " --jobs " + jobs + " --out " + target + " >/dev/null 2>&1";
      const int rc = std::system(line.c_str());
      c.expect(rc == 0, cmd.name + " exited " + std::to_string(rc));
      outputs.push_back(slurp(target) + slurp(target + ".manifest.json"));
      if (fs::exists(target + ".verdict.json")) outputs.back() += slurp(target + ".verdict.json");
    }
    c.expect(!outputs[0].empty(), cmd.name + " wrote nothing");
    c.expect(outputs[0] == outputs[1], cmd.name + " differs between identical runs");
    // Manifest paths differ only by the jobs prefix; compare payload bytes.
    const std::string a = slurp(at("j1_" + cmd.out)), b = slurp(at("j4_" + cmd.out));
    c.expect(a == b, cmd.name + " differs between --jobs 1 and 4");
    ++compared;
  }
  // compare consumes the tune table.
  for (const char* jobs : {"1", "4"}) {
    const std::string line = cli + " compare --a " + at("j1_tune.csv") + " --b " + at("j1_tune.csv") +
                             " --tuner-a hc --tuner-b rs --jobs " + jobs + " --out " + at(std::string("cmp") + jobs + ".csv") +
                             " >/dev/null 2>&1";
    c.expect(std::system(line.c_str()) == 0, "compare failed");
  }
  c.expect(slurp(at("cmp1.csv")) == slurp(at("cmp4.csv")) && !slurp(at("cmp1.csv")).empty(), "compare differs");
  ++compared;
  c.note(std::to_string(compared) + " subcommands byte-identical across reruns and --jobs 1/4");
  fs::remove_all(dir);
  return c.done();
}

Outcome ac9_lrzip() {
  const char* path = std::getenv("LANDSCOPE_LRZIP_W1");
  if (!path || !fs::exists(path)) return {true, true, "set LANDSCOPE_LRZIP_W1 to the converted Lrzip W1 CSV"};
  Check c;
  auto ds = load_dataset(path);
  auto rep = analyze(ds);
  const double lp = rep.local_optima_proportion.value_or(-1), lq = rep.local_optima_quality.value_or(-1);
  c.expect(near(lp * 100.0, 10.5, 1.0), "lp " + num(lp * 100.0) + "%");
  c.expect(near(lq, 0.959, 0.02), "lq " + num(lq));
  c.note("lp=" + num(lp * 100.0) + "% lq=" + num(lq));
  return c.done();
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
  }
  struct Criterion {
    const char* id;
    const char* title;
    std::function<Outcome()> run;
    double limit_seconds;
  };
  const std::vector<Criterion> criteria = {
      {"AC1", "local-optima oracle", ac1_local_optima_oracle, 60},
      {"AC2", "metric fixtures", ac2_metric_fixtures, 0},
      {"AC3", "adaptive neighborhood", ac3_adaptive_neighborhood, 300},
      {"AC4", "statistics oracles", ac4_statistics, 0},
      {"AC5", "tuner directionality", ac5_tuner_directionality, 120},
      {"AC6", "priority validation", ac6_priority_validation, 0},
      {"AC7", "transfer validation", ac7_transfer_validation, 0},
      {"AC8", "determinism", [&] { return ac8_determinism(cli); }, 0},
      {"AC9", "Lrzip W1 external data", ac9_lrzip, 0},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (cr.limit_seconds > 0 && secs >= cr.limit_seconds && o.pass) {
      o.pass = false;
      o.detail += "; runtime " + num(secs) + " s over " + num(cr.limit_seconds) + " s";
    }
    const char* status = o.skipped ? "SKIP" : o.pass ? "PASS" : "FAIL";
    if (!o.pass) ++failed;
    std::printf("%s %s %s: %s (%.1f s)\n", cr.id, status, cr.title, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
