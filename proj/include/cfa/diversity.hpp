#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cfa/core.hpp"
#include "cfa/ranking.hpp"

namespace cfa {

/// Pairwise cognitive diversity: symmetric, non-negative, zero diagonal.
struct DiversityMatrix {
  std::vector<std::string> system_ids;
  std::vector<std::vector<double>> entries;
  Split source_split = Split::Train;
};

enum class WeightKind { DiversityStrength, Performance, Equal };

struct WeightVector {
  std::vector<std::string> system_ids;
  std::vector<double> weights;
  WeightKind kind = WeightKind::Equal;
  Split source_split = Split::Train;
  // Set when diversity strength degenerated (all profiles identical) and
  // equal weights were substituted.
  bool fallback_equal = false;
};

/// Root-mean-square difference between two rank-score characteristics:
/// sqrt(sum_i (a_i - b_i)^2 / n). Zero iff the sorted profiles coincide.
double cognitive_diversity(const RscProfile& a, const RscProfile& b);

DiversityMatrix diversity_matrix(const std::vector<RscProfile>& profiles, Split source_split);

/// Restrict a matrix to the systems at the given indices, in that order.
DiversityMatrix submatrix(const DiversityMatrix& matrix, const std::vector<std::size_t>& indices);

/// Mean cognitive diversity of each system against the rest of the ensemble:
/// ds_j = sum_{i != j} cd(j, i) / (t - 1). An all-zero matrix (identical
/// systems) falls back to equal weights with fallback_equal set.
WeightVector diversity_strength(const DiversityMatrix& matrix);

WeightVector equal_weights(std::vector<std::string> system_ids, Split source_split);

}  // namespace cfa
