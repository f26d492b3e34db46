#include "cfa/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cfa {

std::vector<double> scores_to_ranks(const std::vector<double>& column, TiePolicy policy) {
  const std::size_t n = column.size();
  for (double value : column) {
    if (!std::isfinite(value)) throw std::invalid_argument("cannot rank a non-finite score");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return column[a] > column[b]; });

  std::vector<double> ranks(n);
  if (policy == TiePolicy::StableOrdinal) {
    for (std::size_t p = 0; p < n; ++p) ranks[order[p]] = static_cast<double>(p + 1);
    return ranks;
  }

  // AverageFractional: each tie group gets the mean of the positions it spans.
  std::size_t start = 0;
  while (start < n) {
    std::size_t stop = start + 1;
    while (stop < n && column[order[stop]] == column[order[start]]) ++stop;
    const double mean_rank = (static_cast<double>(start) + static_cast<double>(stop - 1)) / 2.0 + 1.0;
    for (std::size_t p = start; p < stop; ++p) ranks[order[p]] = mean_rank;
    start = stop;
  }
  return ranks;
}

RankTable rank_columns(const ScoreTable& table, TiePolicy policy) {
  RankTable out;
  out.system_ids = table.system_ids;
  out.tie_policy = policy;
  out.ranks.reserve(table.system_count());
  for (const auto& column : table.columns) out.ranks.push_back(scores_to_ranks(column, policy));
  return out;
}

RscProfile rsc_profile(std::string system_id, const std::vector<double>& column) {
  RscProfile profile;
  profile.system_id = std::move(system_id);
  profile.values = column;
  std::sort(profile.values.begin(), profile.values.end(), std::greater<>());
  return profile;
}

std::vector<RscProfile> rsc_profiles(const ScoreTable& table) {
  std::vector<RscProfile> profiles;
  profiles.reserve(table.system_count());
  for (std::size_t j = 0; j < table.system_count(); ++j) {
    profiles.push_back(rsc_profile(table.system_ids[j], table.columns[j]));
  }
  return profiles;
}

}  // namespace cfa
