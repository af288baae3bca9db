#pragma once

// Score binning, threshold tuning and significance tests for bot/human
// account scores.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

#include "botscope/common.hpp"

namespace botscope::detect {

enum class OpenAiCategory { very_unlikely, unlikely, unclear, possibly, likely };

inline std::string_view to_string(OpenAiCategory c) {
  switch (c) {
    case OpenAiCategory::very_unlikely: return "very_unlikely";
    case OpenAiCategory::unlikely: return "unlikely";
    case OpenAiCategory::unclear: return "unclear";
    case OpenAiCategory::possibly: return "possibly";
    case OpenAiCategory::likely: return "likely";
  }
  return "unclear";
}

/// Right-closed bins (0,10], (10,45], (45,90], (90,98], (98,100]; 0 joins the
/// first bin so the mapping covers all of [0, 100].
inline OpenAiCategory bin_openai(double score) {
  if (!(score >= 0.0 && score <= 100.0))
    throw std::domain_error("OpenAI-style score outside [0, 100]: " + fmt_real(score));
  if (score <= 10.0) return OpenAiCategory::very_unlikely;
  if (score <= 45.0) return OpenAiCategory::unlikely;
  if (score <= 90.0) return OpenAiCategory::unclear;
  if (score <= 98.0) return OpenAiCategory::possibly;
  return OpenAiCategory::likely;
}

inline constexpr double kDefaultProbabilityThreshold = 0.65;

/// True ("generated") iff prob >= threshold.
inline bool classify_probability(double prob, double threshold = kDefaultProbabilityThreshold) {
  if (!(prob >= 0.0 && prob <= 1.0))
    throw std::domain_error("probability outside [0, 1]: " + fmt_real(prob));
  return prob >= threshold;
}

// ---------------------------------------------------------------------------

enum class Label { bot, human };

inline std::string_view to_string(Label l) { return l == Label::bot ? "bot" : "human"; }

struct LabeledScore {
  double value;
  Label label;
};

struct ThresholdResult {
  double threshold = 0;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  std::size_t tp = 0, fp = 0, fn = 0;
};

inline ThresholdResult make_threshold_result(double threshold, std::size_t tp, std::size_t fp,
                                             std::size_t fn) {
  ThresholdResult r{threshold, 0, 0, 0, tp, fp, fn};
  if (tp + fp) r.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
  if (tp + fn) r.recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
  if (r.precision + r.recall > 0) r.f1 = 2 * r.precision * r.recall / (r.precision + r.recall);
  return r;
}

struct SweepResult {
  ThresholdResult best;
  std::vector<ThresholdResult> curve;  // ascending threshold
};

/// Bots are the positive class and are predicted when value >= threshold.
/// Candidates are one value below the minimum, the midpoints between
/// consecutive distinct values, and one value above the maximum. The best F1
/// wins; ties go to the smallest threshold.
inline SweepResult sweep_threshold(std::vector<LabeledScore> scores) {
  std::size_t bots = 0, humans = 0;
  for (const auto& s : scores) {
    if (std::isnan(s.value)) throw PreconditionError("NaN score in sweep input");
    (s.label == Label::bot ? bots : humans) += 1;
  }
  if (bots == 0 || humans == 0) throw PreconditionError("sweep_threshold needs both bot and human scores");
  std::sort(scores.begin(), scores.end(),
            [](const LabeledScore& a, const LabeledScore& b) { return a.value < b.value; });

  // Distinct values with per-value label counts.
  struct Level {
    double value;
    std::size_t bots, humans;
  };
  std::vector<Level> levels;
  for (const auto& s : scores) {
    if (levels.empty() || levels.back().value != s.value) levels.push_back({s.value, 0, 0});
    (s.label == Label::bot ? levels.back().bots : levels.back().humans) += 1;
  }

  SweepResult out;
  // Everything at or above levels[i] is predicted bot.
  std::size_t tp = bots, fp = humans;
  auto push = [&](double threshold) {
    out.curve.push_back(make_threshold_result(threshold, tp, fp, bots - tp));
  };
  push(levels.front().value - 1.0);
  for (std::size_t i = 1; i < levels.size(); ++i) {
    tp -= levels[i - 1].bots;
    fp -= levels[i - 1].humans;
    double lo = levels[i - 1].value, hi = levels[i].value;
    double mid = lo + (hi - lo) / 2;
    if (!(mid > lo)) mid = hi;
    push(mid);
  }
  tp = 0;
  fp = 0;
  push(levels.back().value + 1.0);

  out.best = out.curve.front();
  for (const auto& r : out.curve)
    if (r.f1 > out.best.f1) out.best = r;
  return out;
}

/// Fraction of bot-labeled scores >= threshold.
inline double recall_at(const std::vector<LabeledScore>& scores, double threshold) {
  std::size_t bots = 0, hit = 0;
  for (const auto& s : scores) {
    if (s.label != Label::bot) continue;
    ++bots;
    hit += s.value >= threshold;
  }
  if (bots == 0) throw PreconditionError("recall_at needs at least one bot-labeled score");
  return static_cast<double>(hit) / static_cast<double>(bots);
}

// ---------------------------------------------------------------------------

struct WelchResult {
  double t = 0;
  double df = 0;
  double p = 1;  // two-sided
  double mean_a = 0, mean_b = 0;
  double sd_a = 0, sd_b = 0;  // sample SDs (n - 1)
};

/// Welch's unequal-variance t test with Welch-Satterthwaite degrees of freedom.
inline WelchResult welch_t(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() < 2 || b.size() < 2) throw PreconditionError("welch_t needs at least 2 values per sample");
  auto moments = [](const std::vector<double>& x) {
    double m = 0;
    for (double v : x) m += v;
    m /= static_cast<double>(x.size());
    double ss = 0;
    for (double v : x) ss += (v - m) * (v - m);
    return std::pair{m, ss / static_cast<double>(x.size() - 1)};
  };
  auto [ma, va] = moments(a);
  auto [mb, vb] = moments(b);
  double qa = va / static_cast<double>(a.size()), qb = vb / static_cast<double>(b.size());
  double se2 = qa + qb;
  if (!(se2 > 0)) throw PreconditionError("welch_t: both samples have zero variance");
  WelchResult r;
  r.mean_a = ma;
  r.mean_b = mb;
  r.sd_a = std::sqrt(va);
  r.sd_b = std::sqrt(vb);
  r.t = (ma - mb) / std::sqrt(se2);
  r.df = se2 * se2 /
         (qa * qa / static_cast<double>(a.size() - 1) + qb * qb / static_cast<double>(b.size() - 1));
  boost::math::students_t dist(r.df);
  r.p = std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(r.t))));
  return r;
}

}  // namespace botscope::detect
