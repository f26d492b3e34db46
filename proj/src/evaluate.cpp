#include "cfa/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cfa {

std::vector<int> classify_by_threshold(const FusedColumn& fused, double threshold) {
  if (fused.kind != FusedColumn::Kind::ScoreCombination) {
    throw ConfigError("threshold classification expects a score combination");
  }
  std::vector<int> predictions(fused.values.size());
  for (std::size_t i = 0; i < fused.values.size(); ++i) {
    predictions[i] = fused.values[i] >= threshold ? 1 : 0;
  }
  return predictions;
}

std::vector<int> classify_top_k(const FusedColumn& fused, double positive_prior) {
  if (fused.kind != FusedColumn::Kind::RankCombination) {
    throw ConfigError("top-k classification expects a rank combination");
  }
  if (!(positive_prior > 0.0 && positive_prior < 1.0)) {
    throw ConfigError("positive prior must lie in (0,1), got " + std::to_string(positive_prior));
  }
  const std::size_t n = fused.values.size();
  const auto k = static_cast<std::size_t>(
      std::lround(static_cast<double>(n) * positive_prior));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return fused.values[a] < fused.values[b]; });

  std::vector<int> predictions(n, 0);
  for (std::size_t p = 0; p < k && p < n; ++p) predictions[order[p]] = 1;
  return predictions;
}

EvalReport compute_metrics(const std::vector<int>& predictions, const std::vector<int>& labels) {
  if (predictions.size() != labels.size()) {
    throw std::invalid_argument("predictions and labels differ in length");
  }
  EvalReport report;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    if ((labels[i] != 0 && labels[i] != 1) || (predictions[i] != 0 && predictions[i] != 1)) {
      throw std::invalid_argument("labels and predictions must be 0 or 1");
    }
    if (predictions[i] == 1) {
      labels[i] == 1 ? ++report.confusion.tp : ++report.confusion.fp;
    } else {
      labels[i] == 1 ? ++report.confusion.fn : ++report.confusion.tn;
    }
  }
  const auto& c = report.confusion;
  const std::size_t n = predictions.size();

  auto ratio = [&report](std::size_t numerator, std::size_t denominator) {
    if (denominator == 0) {
      report.degenerate = true;
      return 0.0;
    }
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  };
  report.accuracy = ratio(c.tp + c.tn, n);
  report.precision = ratio(c.tp, c.tp + c.fp);
  report.recall = ratio(c.tp, c.tp + c.fn);
  if (report.precision + report.recall > 0.0) {
    report.f1 = f1_from_pr(report.precision, report.recall);
  } else {
    report.f1 = 0.0;
    report.degenerate = true;
  }
  return report;
}

double f1_from_pr(double precision, double recall) {
  if (precision + recall == 0.0) throw std::domain_error("F1 undefined: precision + recall == 0");
  return 2.0 * precision * recall / (precision + recall);
}

double optimize_threshold(const std::vector<double>& fused_scores, const std::vector<int>& labels) {
  if (fused_scores.size() != labels.size() || fused_scores.empty()) {
    throw std::invalid_argument("threshold optimization needs matching nonempty scores and labels");
  }
  std::vector<double> sorted = fused_scores;
  std::sort(sorted.begin(), sorted.end());

  std::vector<double> candidates{0.5};
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (sorted[i] != sorted[i + 1]) candidates.push_back((sorted[i] + sorted[i + 1]) / 2.0);
  }

  auto accuracy_at = [&](double threshold) {
    std::size_t correct = 0;
    for (std::size_t i = 0; i < fused_scores.size(); ++i) {
      const int predicted = fused_scores[i] >= threshold ? 1 : 0;
      if (predicted == labels[i]) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(fused_scores.size());
  };

  double best_threshold = 0.5;
  double best_accuracy = accuracy_at(0.5);
  for (const double candidate : candidates) {
    const double accuracy = accuracy_at(candidate);
    const bool better = accuracy > best_accuracy;
    const bool tie_closer =
        accuracy == best_accuracy && std::abs(candidate - 0.5) < std::abs(best_threshold - 0.5);
    if (better || tie_closer) {
      best_threshold = candidate;
      best_accuracy = accuracy;
    }
  }
  return best_threshold;
}

double positive_fraction(const std::vector<int>& labels) {
  if (labels.empty()) throw ConfigError("cannot estimate a prior from an empty label set");
  std::size_t positives = 0;
  for (const int label : labels) positives += label == 1 ? 1 : 0;
  return static_cast<double>(positives) / static_cast<double>(labels.size());
}

}  // namespace cfa
