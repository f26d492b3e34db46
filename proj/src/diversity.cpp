#include "cfa/diversity.hpp"

#include <cmath>
#include <stdexcept>

namespace cfa {

double cognitive_diversity(const RscProfile& a, const RscProfile& b) {
  const std::size_t n = a.values.size();
  if (n != b.values.size()) {
    throw std::invalid_argument("profile length mismatch: " + a.system_id + " has " +
                                std::to_string(n) + ", " + b.system_id + " has " +
                                std::to_string(b.values.size()));
  }
  if (n == 0) throw std::invalid_argument("cognitive diversity of empty profiles");
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double diff = a.values[i] - b.values[i];
    sum_sq += diff * diff;
  }
  return std::sqrt(sum_sq / static_cast<double>(n));
}

DiversityMatrix diversity_matrix(const std::vector<RscProfile>& profiles, Split source_split) {
  const std::size_t t = profiles.size();
  if (t < 2) throw std::invalid_argument("diversity matrix needs at least two systems");
  DiversityMatrix matrix;
  matrix.source_split = source_split;
  matrix.system_ids.reserve(t);
  for (const auto& profile : profiles) matrix.system_ids.push_back(profile.system_id);
  matrix.entries.assign(t, std::vector<double>(t, 0.0));
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t k = j + 1; k < t; ++k) {
      const double cd = cognitive_diversity(profiles[j], profiles[k]);
      matrix.entries[j][k] = cd;
      matrix.entries[k][j] = cd;
    }
  }
  return matrix;
}

DiversityMatrix submatrix(const DiversityMatrix& matrix, const std::vector<std::size_t>& indices) {
  DiversityMatrix out;
  out.source_split = matrix.source_split;
  for (const std::size_t j : indices) out.system_ids.push_back(matrix.system_ids.at(j));
  out.entries.assign(indices.size(), std::vector<double>(indices.size(), 0.0));
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t b = 0; b < indices.size(); ++b) {
      out.entries[a][b] = matrix.entries.at(indices[a]).at(indices[b]);
    }
  }
  return out;
}

WeightVector diversity_strength(const DiversityMatrix& matrix) {
  const std::size_t t = matrix.system_ids.size();
  if (t < 2) throw std::invalid_argument("diversity strength needs at least two systems");

  bool all_zero = true;
  for (std::size_t j = 0; j < t && all_zero; ++j) {
    for (std::size_t k = 0; k < t && all_zero; ++k) {
      if (matrix.entries[j][k] != 0.0) all_zero = false;
    }
  }
  if (all_zero) {
    WeightVector fallback = equal_weights(matrix.system_ids, matrix.source_split);
    fallback.fallback_equal = true;
    return fallback;
  }

  WeightVector out;
  out.system_ids = matrix.system_ids;
  out.kind = WeightKind::DiversityStrength;
  out.source_split = matrix.source_split;
  out.weights.resize(t);
  for (std::size_t j = 0; j < t; ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < t; ++i) {
      if (i != j) sum += matrix.entries[j][i];
    }
    out.weights[j] = sum / static_cast<double>(t - 1);
  }
  return out;
}

WeightVector equal_weights(std::vector<std::string> system_ids, Split source_split) {
  WeightVector out;
  out.weights.assign(system_ids.size(), 1.0);
  out.system_ids = std::move(system_ids);
  out.kind = WeightKind::Equal;
  out.source_split = source_split;
  return out;
}

}  // namespace cfa
