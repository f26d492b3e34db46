#include "cfa/fusion.hpp"

#include <cmath>

namespace cfa {

namespace {

void check_shapes(const std::vector<std::span<const double>>& columns, const WeightVector& weights) {
  if (columns.size() < 2) throw ConfigError("fusion needs at least two systems");
  if (weights.weights.size() != columns.size()) {
    throw ConfigError("weight count " + std::to_string(weights.weights.size()) +
                      " does not match system count " + std::to_string(columns.size()));
  }
  for (const auto& column : columns) {
    if (column.size() != columns.front().size()) throw ConfigError("column length mismatch");
  }
}

}  // namespace

FusedColumn combine_scores(const std::vector<std::span<const double>>& columns,
                           const WeightVector& weights) {
  check_shapes(columns, weights);
  double weight_sum = 0.0;
  for (std::size_t j = 0; j < weights.weights.size(); ++j) {
    const double w = weights.weights[j];
    if (w < 0.0 || !std::isfinite(w)) {
      throw ConfigError("negative or non-finite weight for system " + weights.system_ids[j]);
    }
    weight_sum += w;
  }
  if (weight_sum <= 0.0) throw ConfigError("score combination weights sum to zero");

  FusedColumn fused;
  fused.kind = FusedColumn::Kind::ScoreCombination;
  const std::size_t n = columns.front().size();
  fused.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < columns.size(); ++j) sum += weights.weights[j] * columns[j][i];
    fused.values[i] = sum / weight_sum;
  }
  return fused;
}

FusedColumn combine_ranks(const std::vector<std::span<const double>>& rank_columns,
                          const WeightVector& weights, RcWeighting weighting) {
  check_shapes(rank_columns, weights);

  std::vector<double> applied(weights.weights.size());
  for (std::size_t j = 0; j < weights.weights.size(); ++j) {
    const double w = weights.weights[j];
    if (w <= 0.0 || !std::isfinite(w)) {
      throw ConfigError("rank combination requires strictly positive weights; system " +
                        weights.system_ids[j] + " has weight " + std::to_string(w));
    }
    if (weights.kind == WeightKind::Equal || weighting == RcWeighting::Direct) {
      applied[j] = w;
    } else {
      applied[j] = 1.0 / w;
      if (!std::isfinite(applied[j])) {
        throw ConfigError("reciprocal weight overflows for system " + weights.system_ids[j]);
      }
    }
  }

  double weight_sum = 0.0;
  for (const double w : applied) weight_sum += w;

  FusedColumn fused;
  fused.kind = FusedColumn::Kind::RankCombination;
  const std::size_t n = rank_columns.front().size();
  fused.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < rank_columns.size(); ++j) sum += applied[j] * rank_columns[j][i];
    fused.values[i] = sum / weight_sum;
  }
  return fused;
}

WeightVector performance_weights(const ScoreTable& table, const std::vector<std::string>& subset,
                                 double threshold) {
  if (!table.labels) throw ConfigError("performance weights need a labeled table");
  const auto& labels = *table.labels;
  const std::size_t n = table.item_count();
  if (n == 0) throw ConfigError("performance weights need a nonempty table");

  WeightVector out;
  out.kind = WeightKind::Performance;
  out.source_split = table.split;
  for (const auto& id : subset) {
    const auto& column = table.columns[table.system_index(id)];
    std::size_t correct = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const int predicted = column[i] >= threshold ? 1 : 0;
      if (predicted == labels[i]) ++correct;
    }
    out.system_ids.push_back(id);
    out.weights.push_back(static_cast<double>(correct) / static_cast<double>(n));
  }
  return out;
}

std::vector<std::span<const double>> column_views(const ScoreTable& table) {
  std::vector<std::span<const double>> views;
  views.reserve(table.columns.size());
  for (const auto& column : table.columns) views.emplace_back(column);
  return views;
}

}  // namespace cfa
