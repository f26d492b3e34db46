#pragma once

#include <span>
#include <vector>

#include "cfa/core.hpp"
#include "cfa/diversity.hpp"

namespace cfa {

/// A fused per-item column. Score combinations stay in [0,1] for normalized
/// inputs (convex combination); rank combinations lie in [1, n] with lower
/// values meaning more positive.
struct FusedColumn {
  enum class Kind { ScoreCombination, RankCombination };
  Kind kind = Kind::ScoreCombination;
  std::vector<double> values;
  FusionSpec provenance;
};

/// Weighted mean of score columns: value_i = sum_j w_j s_j(i) / sum_j w_j.
/// Equal weights reproduce the average score combination. Weights must be
/// non-negative with a positive sum.
FusedColumn combine_scores(const std::vector<std::span<const double>>& columns,
                           const WeightVector& weights);

/// Weighted mean of rank columns. Performance and diversity-strength
/// weights are applied as reciprocals (1/w per system) under Reciprocal
/// weighting, directly under Direct; equal weights are used as-is either
/// way. Every weight must be strictly positive.
FusedColumn combine_ranks(const std::vector<std::span<const double>>& rank_columns,
                          const WeightVector& weights, RcWeighting weighting);

/// Accuracy of each subset system on the given labeled normalized table,
/// predicting 1 when score >= threshold.
WeightVector performance_weights(const ScoreTable& table, const std::vector<std::string>& subset,
                                 double threshold);

std::vector<std::span<const double>> column_views(const ScoreTable& table);

}  // namespace cfa
