#pragma once

#include <vector>

#include "cfa/core.hpp"
#include "cfa/fusion.hpp"

namespace cfa {

struct Confusion {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;
};

struct EvalReport {
  FusionSpec spec;
  Confusion confusion;
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  // True when some ratio had a zero denominator and was reported as 0.
  bool degenerate = false;
};

/// Predict 1 iff fused score >= threshold. The column must be a score
/// combination.
std::vector<int> classify_by_threshold(const FusedColumn& fused, double threshold);

/// Batch decision rule for rank combinations: the k = round(n * prior)
/// items with the lowest fused rank-score are predicted positive, ties at
/// the cut broken by item order (earlier item admitted).
std::vector<int> classify_top_k(const FusedColumn& fused, double positive_prior);

EvalReport compute_metrics(const std::vector<int>& predictions, const std::vector<int>& labels);

/// Harmonic mean 2PR/(P+R). Throws std::domain_error when P + R == 0.
double f1_from_pr(double precision, double recall);

/// Scan midpoints of the sorted fused training scores for the threshold
/// maximizing training accuracy; ties break toward 0.5. Off by default in
/// every pipeline; offered for calibration experiments.
double optimize_threshold(const std::vector<double>& fused_scores, const std::vector<int>& labels);

/// Fraction of positive labels; the batch prior for rank classification.
double positive_fraction(const std::vector<int>& labels);

}  // namespace cfa
