#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cfa/core.hpp"
#include "cfa/diversity.hpp"
#include "cfa/evaluate.hpp"
#include "cfa/fusion.hpp"
#include "cfa/ingest.hpp"
#include "cfa/ranking.hpp"

namespace cfa {

struct PipelineOptions {
  double threshold = 0.5;
  RcWeighting rc_weighting = RcWeighting::Reciprocal;
  TiePolicy tie_policy = TiePolicy::StableOrdinal;
};

/// One line of a sweep report. method_name is the canonical method string
/// or "SINGLE" for per-system baselines; weight_split is empty for rows
/// whose method takes no weights.
struct ReportRow {
  std::string systems;
  std::string method_name;
  std::optional<Split> weight_split;
  bool transductive = false;
  EvalReport report;
};

struct FuseOutcome {
  FusedColumn fused;
  std::vector<int> predictions;
  std::optional<EvalReport> report;
  WeightVector weights;
};

/// Shared state for evaluating fusion cells over one train/test pair:
/// normalization is fitted on the training split once, ranks, RSC profiles,
/// diversity matrices and per-system accuracies are computed on demand and
/// cached. All caching is internal; cells are pure functions of the inputs.
class FusionPipeline {
 public:
  FusionPipeline(ScoreTable train_raw, ScoreTable test_raw, PipelineOptions options);

  FuseOutcome run_cell(const std::vector<std::string>& subset, Method method, Split weight_split,
                       bool want_eval);

  const ScoreTable& train() const { return train_; }
  const ScoreTable& test() const { return test_; }
  const PipelineOptions& options() const { return options_; }

  /// Applied rank-combination weight vector, for reporting.
  WeightVector cell_weights(const std::vector<std::string>& subset, Method method,
                            Split weight_split);

 private:
  const ScoreTable& table_for(Split split) const { return split == Split::Train ? train_ : test_; }
  const RankTable& test_ranks();
  const DiversityMatrix& diversity_for(Split split);
  const WeightVector& accuracies_for(Split split);
  double train_prior();

  PipelineOptions options_;
  ScoreTable train_;
  ScoreTable test_;
  std::optional<RankTable> test_ranks_;
  std::array<std::optional<DiversityMatrix>, 2> diversity_;
  std::array<std::optional<WeightVector>, 2> accuracies_;
  std::optional<double> train_prior_;
};

/// Every subset of size >= 2 under the ten method variants (ASC, ARC, and
/// the four weighted rules under train- and test-split weighting), plus one
/// SINGLE baseline row per system when include_singles is set. Rows come
/// back sorted by accuracy descending with a deterministic tie order.
std::vector<ReportRow> sweep(const ScoreTable& train_raw, const ScoreTable& test_raw,
                             const PipelineOptions& options, bool include_singles = true);

/// Accuracy descending; ties by systems string, then method, then split.
void sort_report(std::vector<ReportRow>& rows);

std::string join_systems(const std::vector<std::string>& subset);

}  // namespace cfa
