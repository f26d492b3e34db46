#pragma once

#include <string>
#include <vector>

#include "cfa/core.hpp"

namespace cfa {

/// Per-system ranks over one table. Under StableOrdinal every column is a
/// permutation of 1..n; AverageFractional assigns tied items the mean of
/// the ordinal ranks they span, so entries may be fractional.
struct RankTable {
  std::vector<std::string> system_ids;
  std::vector<std::vector<double>> ranks;
  TiePolicy tie_policy = TiePolicy::StableOrdinal;
};

/// Rank-score characteristic of one system: its scores indexed by rank,
/// i.e. sorted non-increasing. Characterizes scoring behavior independent
/// of item identity.
struct RscProfile {
  std::string system_id;
  std::vector<double> values;
};

/// Rank a score column, rank 1 = highest score. StableOrdinal breaks ties
/// by input position (earlier item wins).
std::vector<double> scores_to_ranks(const std::vector<double>& column, TiePolicy policy);

RankTable rank_columns(const ScoreTable& table, TiePolicy policy);

RscProfile rsc_profile(std::string system_id, const std::vector<double>& column);

/// One profile per system; entry i-1 is the value plotted at rank i.
std::vector<RscProfile> rsc_profiles(const ScoreTable& table);

}  // namespace cfa
