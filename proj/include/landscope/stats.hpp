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

// Non-parametric statistics: rank correlation, rank-sum test, A12 effect
// size, the combined comparison verdict and inter-rater agreement.

#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "landscope/error.hpp"

namespace landscope::stats {

inline double mean(std::span<const double> xs) {
  if (xs.empty()) throw InvalidArgument("mean of empty sample");
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

// Sample (n - 1) standard deviation; 0 for a single value.
inline double sample_std(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean(xs);
  double ss = 0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

inline double median(std::vector<double> xs) {
  if (xs.empty()) throw InvalidArgument("median of empty sample");
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

// 1-based average ranks; tied values share the mean of their positions.
inline std::vector<double> midranks(std::span<const double> xs) {
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  std::vector<double> ranks(xs.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && xs[order[j + 1]] == xs[order[i]]) ++j;
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

inline double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) throw InvalidArgument("pearson: need equal lengths >= 2");
  const double mx = mean(xs), my = mean(ys);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0 || syy == 0) throw UndefinedMetric("correlation undefined (zero variance)");
  return sxy / std::sqrt(sxx * syy);
}

// ----------------------------------------------------------------------------

enum class CorrelationTier { weak, moderate, strong };

inline std::string_view to_string(CorrelationTier t) {
  switch (t) {
    case CorrelationTier::weak: return "weak";
    case CorrelationTier::moderate: return "moderate";
    case CorrelationTier::strong: return "strong";
  }
  return "?";
}

// Tiers on |rho|: moderate in (0.39, 0.69], strong in (0.69, 1].
inline CorrelationTier classify_correlation(double rho) {
  const double a = std::abs(rho);
  if (a > 0.69) return CorrelationTier::strong;
  if (a > 0.39) return CorrelationTier::moderate;
  return CorrelationTier::weak;
}

struct SpearmanResult {
  double rho = 0;
  CorrelationTier tier = CorrelationTier::weak;
};

inline SpearmanResult spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) throw InvalidArgument("spearman: need equal lengths >= 2");
  const auto rx = midranks(xs), ry = midranks(ys);
  double rho;
  try {
    rho = pearson(rx, ry);
  } catch (const UndefinedMetric&) {
    throw UndefinedMetric("rank correlation undefined (constant input)");
  }
  return {rho, classify_correlation(rho)};
}

// ----------------------------------------------------------------------------
// Wilcoxon rank-sum (Mann-Whitney) test, two-sided.

namespace detail {

// Exact two-sided p-value of the rank sum `w` of a sample of size n1 among
// ranks 1..n1+n2 without ties. Counts rank subsets by dynamic programming.
inline double rank_sum_exact_p(std::size_t n1, std::size_t n2, double w) {
  const std::size_t n = n1 + n2;
  const std::size_t max_sum = n * (n + 1) / 2;
  // ways[k][s]: number of k-subsets of the ranks seen so far summing to s.
  std::vector<std::vector<double>> ways(n1 + 1, std::vector<double>(max_sum + 1, 0.0));
  ways[0][0] = 1;
  for (std::size_t r = 1; r <= n; ++r) {
    for (std::size_t k = std::min(r, n1); k >= 1; --k) {
      for (std::size_t s = max_sum; s >= r; --s) ways[k][s] += ways[k - 1][s - r];
    }
  }
  double total = 0, lower = 0, upper = 0;
  for (std::size_t s = 0; s <= max_sum; ++s) {
    const double c = ways[n1][s];
    total += c;
    if (static_cast<double>(s) <= w + 1e-9) lower += c;
    if (static_cast<double>(s) >= w - 1e-9) upper += c;
  }
  return std::min(1.0, 2.0 * std::min(lower, upper) / total);
}

}  // namespace detail

inline constexpr std::size_t kExactRankSumLimit = 20;

// Exact enumeration for tie-free samples with |a| + |b| <= 20, otherwise
// the normal approximation with tie-corrected variance and a 0.5 continuity
// correction.
inline double wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw InvalidArgument("wilcoxon_rank_sum: empty sample");
  std::vector<double> pooled(a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  const auto ranks = midranks(pooled);
  const std::size_t n1 = a.size(), n2 = b.size(), n = n1 + n2;
  double w = 0;
  for (std::size_t i = 0; i < n1; ++i) w += ranks[i];

  std::vector<double> sorted = pooled;
  std::sort(sorted.begin(), sorted.end());
  double tie_term = 0;
  bool ties = false;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && sorted[j + 1] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i + 1);
    if (t > 1) ties = true;
    tie_term += t * t * t - t;
    i = j + 1;
  }

  if (!ties && n <= kExactRankSumLimit) return detail::rank_sum_exact_p(n1, n2, w);

  const double dn = static_cast<double>(n);
  const double expected = static_cast<double>(n1) * (dn + 1) / 2.0;
  const double var = static_cast<double>(n1 * n2) / 12.0 * ((dn + 1) - tie_term / (dn * (dn - 1)));
  if (var <= 0) return 1.0;
  const double z = std::max(0.0, std::abs(w - expected) - 0.5) / std::sqrt(var);
  return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

// ----------------------------------------------------------------------------

enum class Orientation { higher_better, lower_better };

// Vargha-Delaney A12: probability that a draw from `a` is preferable to a
// draw from `b`, ties counting one half.
inline double a12(std::span<const double> a, std::span<const double> b, Orientation orientation) {
  if (a.empty() || b.empty()) throw InvalidArgument("a12: empty sample");
  double score = 0;
  for (double x : a) {
    for (double y : b) {
      if (x == y) {
        score += 0.5;
      } else if ((orientation == Orientation::higher_better) == (x > y)) {
        score += 1.0;
      }
    }
  }
  return score / static_cast<double>(a.size() * b.size());
}

enum class VerdictLabel { better, similar, worse };

inline std::string_view to_string(VerdictLabel l) {
  switch (l) {
    case VerdictLabel::better: return "better";
    case VerdictLabel::similar: return "similar";
    case VerdictLabel::worse: return "worse";
  }
  return "?";
}

inline constexpr double kSignificance = 0.05;
inline constexpr double kA12Better = 0.56;
inline constexpr double kA12Worse = 0.44;

struct Verdict {
  double p_value = 1;
  double a12 = 0.5;
  VerdictLabel label = VerdictLabel::similar;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// "better" means `a` is significantly preferable to `b`.
inline Verdict verdict(std::span<const double> a, std::span<const double> b, Orientation orientation) {
  Verdict v;
  v.p_value = wilcoxon_rank_sum(a, b);
  v.a12 = landscope::stats::a12(a, b, orientation);
  if (v.p_value < kSignificance && v.a12 > kA12Better) {
    v.label = VerdictLabel::better;
  } else if (v.p_value < kSignificance && v.a12 < kA12Worse) {
    v.label = VerdictLabel::worse;
  }
  return v;
}

// ----------------------------------------------------------------------------
// Inter-rater agreement

struct KappaResult {
  double kappa = 0;
  bool degenerate = false;  // chance agreement is 1: both raters constant and equal
};

inline KappaResult cohens_kappa(std::span<const std::string> la, std::span<const std::string> lb) {
  if (la.size() != lb.size() || la.empty()) throw InvalidArgument("cohens_kappa: need equal non-empty label lists");
  const double n = static_cast<double>(la.size());
  std::map<std::string, double> fa, fb;
  double agree = 0;
  for (std::size_t i = 0; i < la.size(); ++i) {
    fa[la[i]] += 1;
    fb[lb[i]] += 1;
    agree += la[i] == lb[i];
  }
  const double po = agree / n;
  double pe = 0;
  for (const auto& [label, c] : fa) {
    auto it = fb.find(label);
    if (it != fb.end()) pe += (c / n) * (it->second / n);
  }
  if (pe >= 1.0) return {1.0, true};
  return {(po - pe) / (1.0 - pe), false};
}

inline constexpr double kReliableAgreement = 0.7;

struct AgreementSummary {
  double human_kappa = 0;
  std::vector<double> per_llm_kappa;
  double overall = 0;
  bool reliable = false;

  friend bool operator==(const AgreementSummary&, const AgreementSummary&) = default;
};

// Mean of the human-human kappa and every human-consensus-vs-LLM kappa.
inline AgreementSummary overall_agreement(double human_kappa, std::vector<double> llm_kappas) {
  AgreementSummary s;
  s.human_kappa = human_kappa;
  s.per_llm_kappa = std::move(llm_kappas);
  double sum = human_kappa;
  for (double k : s.per_llm_kappa) sum += k;
  s.overall = sum / static_cast<double>(1 + s.per_llm_kappa.size());
  s.reliable = s.overall >= kReliableAgreement;
  return s;
}

}  // namespace landscope::stats
