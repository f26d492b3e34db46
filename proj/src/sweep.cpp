#include "cfa/sweep.hpp"

#include <algorithm>
#include <bit>

namespace cfa {

namespace {

std::size_t split_slot(Split split) { return split == Split::Train ? 0 : 1; }

void require_valid(const ScoreTable& table, const char* which) {
  const ValidationReport report = validate_table(table);
  if (!report.ok()) {
    throw ConfigError(std::string(which) + " table is invalid: " + report.violations.front().detail);
  }
}

int method_rank(const std::string& name) {
  static const std::vector<std::string> order = {"ASC",     "ARC",     "WCP-SC", "WCP-RC",
                                                 "WCDS-SC", "WCDS-RC", "SINGLE"};
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] == name) return static_cast<int>(i);
  }
  return static_cast<int>(order.size());
}

}  // namespace

FusionPipeline::FusionPipeline(ScoreTable train_raw, ScoreTable test_raw, PipelineOptions options)
    : options_(options) {
  require_valid(train_raw, "train");
  require_valid(test_raw, "test");
  train_raw.split = Split::Train;
  test_raw.split = Split::Test;
  const NormalizationParams params = min_max_fit(train_raw);
  train_ = min_max_apply(train_raw, params);
  test_ = min_max_apply(test_raw, params);
}

const RankTable& FusionPipeline::test_ranks() {
  if (!test_ranks_) test_ranks_ = rank_columns(test_, options_.tie_policy);
  return *test_ranks_;
}

const DiversityMatrix& FusionPipeline::diversity_for(Split split) {
  auto& slot = diversity_[split_slot(split)];
  if (!slot) slot = diversity_matrix(rsc_profiles(table_for(split)), split);
  return *slot;
}

const WeightVector& FusionPipeline::accuracies_for(Split split) {
  auto& slot = accuracies_[split_slot(split)];
  if (!slot) {
    const ScoreTable& table = table_for(split);
    if (!table.labels) {
      throw ConfigError("performance weighting on the " + to_string(split) +
                        " split needs labels in that file");
    }
    slot = performance_weights(table, table.system_ids, options_.threshold);
  }
  return *slot;
}

double FusionPipeline::train_prior() {
  if (!train_prior_) {
    if (!train_.labels) throw ConfigError("rank classification needs labeled training data for the prior");
    train_prior_ = positive_fraction(*train_.labels);
  }
  return *train_prior_;
}

WeightVector FusionPipeline::cell_weights(const std::vector<std::string>& subset, Method method,
                                          Split weight_split) {
  switch (method) {
    case Method::ASC:
    case Method::ARC:
      return equal_weights(subset, weight_split);
    case Method::WCP_SC:
    case Method::WCP_RC: {
      const WeightVector& all = accuracies_for(weight_split);
      WeightVector out;
      out.kind = WeightKind::Performance;
      out.source_split = weight_split;
      for (const auto& id : subset) {
        const ScoreTable& table = table_for(weight_split);
        out.system_ids.push_back(id);
        out.weights.push_back(all.weights[table.system_index(id)]);
      }
      return out;
    }
    case Method::WCDS_SC:
    case Method::WCDS_RC: {
      const DiversityMatrix& full = diversity_for(weight_split);
      const ScoreTable& table = table_for(weight_split);
      std::vector<std::size_t> indices;
      indices.reserve(subset.size());
      for (const auto& id : subset) indices.push_back(table.system_index(id));
      return diversity_strength(submatrix(full, indices));
    }
  }
  throw ConfigError("unhandled method");
}

FuseOutcome FusionPipeline::run_cell(const std::vector<std::string>& subset, Method method,
                                     Split weight_split, bool want_eval) {
  if (subset.size() < 2) throw ConfigError("fusion needs at least two systems");

  FuseOutcome outcome;
  outcome.weights = cell_weights(subset, method, weight_split);

  FusionSpec spec;
  spec.subset = subset;
  spec.method = method;
  spec.weight_split = weight_split;
  spec.threshold = options_.threshold;

  if (is_score_method(method)) {
    std::vector<std::span<const double>> columns;
    columns.reserve(subset.size());
    for (const auto& id : subset) columns.emplace_back(test_.columns[test_.system_index(id)]);
    outcome.fused = combine_scores(columns, outcome.weights);
    outcome.fused.provenance = spec;
    outcome.predictions = classify_by_threshold(outcome.fused, options_.threshold);
  } else {
    spec.positive_prior = train_prior();
    const RankTable& ranks = test_ranks();
    std::vector<std::span<const double>> columns;
    columns.reserve(subset.size());
    for (const auto& id : subset) columns.emplace_back(ranks.ranks[test_.system_index(id)]);
    outcome.fused = combine_ranks(columns, outcome.weights, options_.rc_weighting);
    outcome.fused.provenance = spec;
    outcome.predictions = classify_top_k(outcome.fused, spec.positive_prior);
  }

  if (want_eval) {
    if (!test_.labels) throw ConfigError("evaluation needs a labeled test file");
    EvalReport report = compute_metrics(outcome.predictions, *test_.labels);
    report.spec = outcome.fused.provenance;
    outcome.report = report;
  }
  return outcome;
}

std::string join_systems(const std::vector<std::string>& subset) {
  std::string out;
  for (const auto& id : subset) {
    if (!out.empty()) out += '+';
    out += id;
  }
  return out;
}

std::vector<ReportRow> sweep(const ScoreTable& train_raw, const ScoreTable& test_raw,
                             const PipelineOptions& options, bool include_singles) {
  {
    std::vector<std::string> train_ids = train_raw.system_ids;
    std::vector<std::string> test_ids = test_raw.system_ids;
    std::sort(train_ids.begin(), train_ids.end());
    std::sort(test_ids.begin(), test_ids.end());
    if (train_ids != test_ids) throw ConfigError("train and test files list different systems");
  }
  if (!train_raw.labels) throw ConfigError("sweep needs a labeled train file");
  if (!test_raw.labels) throw ConfigError("sweep needs a labeled test file");

  FusionPipeline pipeline(train_raw, test_raw, options);
  const std::size_t t = pipeline.test().system_count();
  if (t < 2) throw ConfigError("sweep needs at least two systems");

  std::vector<ReportRow> rows;
  const auto& ids = pipeline.test().system_ids;

  for (std::size_t mask = 1; mask < (std::size_t{1} << t); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<std::string> subset;
    for (std::size_t j = 0; j < t; ++j) {
      if (mask & (std::size_t{1} << j)) subset.push_back(ids[j]);
    }
    for (const Method method : {Method::ASC, Method::ARC, Method::WCP_SC, Method::WCP_RC,
                                Method::WCDS_SC, Method::WCDS_RC}) {
      const bool weighted = method != Method::ASC && method != Method::ARC;
      const std::vector<Split> splits =
          weighted ? std::vector<Split>{Split::Train, Split::Test} : std::vector<Split>{Split::Train};
      for (const Split split : splits) {
        FuseOutcome outcome = pipeline.run_cell(subset, method, split, true);
        ReportRow row;
        row.systems = join_systems(subset);
        row.method_name = to_string(method);
        if (weighted) {
          row.weight_split = split;
          row.transductive = split == Split::Test;
        }
        row.report = *outcome.report;
        rows.push_back(std::move(row));
      }
    }
  }

  if (include_singles) {
    const ScoreTable& test = pipeline.test();
    for (std::size_t j = 0; j < t; ++j) {
      FusedColumn column;
      column.kind = FusedColumn::Kind::ScoreCombination;
      column.values = test.columns[j];
      column.provenance.subset = {test.system_ids[j]};
      column.provenance.threshold = options.threshold;
      const std::vector<int> predictions = classify_by_threshold(column, options.threshold);
      ReportRow row;
      row.systems = test.system_ids[j];
      row.method_name = "SINGLE";
      row.report = compute_metrics(predictions, *test.labels);
      row.report.spec = column.provenance;
      rows.push_back(std::move(row));
    }
  }

  sort_report(rows);
  return rows;
}

void sort_report(std::vector<ReportRow>& rows) {
  std::sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
    if (a.report.accuracy != b.report.accuracy) return a.report.accuracy > b.report.accuracy;
    if (a.systems != b.systems) return a.systems < b.systems;
    const int ra = method_rank(a.method_name);
    const int rb = method_rank(b.method_name);
    if (ra != rb) return ra < rb;
    const int sa = a.weight_split ? (*a.weight_split == Split::Train ? 0 : 1) : -1;
    const int sb = b.weight_split ? (*b.weight_split == Split::Train ? 0 : 1) : -1;
    return sa < sb;
  });
}

}  // namespace cfa
