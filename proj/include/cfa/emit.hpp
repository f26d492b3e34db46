#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfa/diversity.hpp"
#include "cfa/evaluate.hpp"
#include "cfa/ranking.hpp"
#include "cfa/sweep.hpp"

namespace cfa {

/// Shortest decimal string that round-trips the value exactly.
std::string format_shortest(double value);

/// Fixed-point with six decimals, the precision used in metric reports.
std::string format_fixed6(double value);

/// Report CSV: header systems,method,weight_split,transductive,accuracy,
/// precision,recall,f1. weight_split prints "-" when the method takes no
/// weights; metrics print with six decimals.
std::string write_report_csv(const std::vector<ReportRow>& rows);

/// Predictions CSV: header item_id,label,fused_value,prediction. Fused
/// values keep full precision; the label cell is empty for unlabeled data.
std::string write_predictions_csv(const std::vector<std::string>& item_ids,
                                  const std::optional<std::vector<int>>& labels,
                                  const std::vector<double>& fused_values,
                                  const std::vector<int>& predictions);

/// Flat key-value JSON document with the evaluation fields of one cell.
std::string write_metrics_json(const ReportRow& row, double threshold, double positive_prior,
                               RcWeighting rc_weighting, TiePolicy tie_policy);

/// Confusion counts and metrics alone, for re-evaluated prediction files.
std::string write_eval_json(const EvalReport& report);

/// Diversity matrix CSV: header system,<sys1>,...,<sysT>, six decimals.
std::string write_diversity_csv(const DiversityMatrix& matrix);

/// Diversity strength CSV: header system,ds, six decimals.
std::string write_ds_csv(const WeightVector& weights);

/// Rank-score CSV: header rank,<sys1>,...,<sysT>, rows i = 1..n.
std::string write_rsc_csv(const std::vector<RscProfile>& profiles);

/// Self-contained 1000x600 SVG line chart of the rank-score profiles: one
/// polyline per system plus a legend. No external dependencies.
std::string write_rsc_svg(const std::vector<RscProfile>& profiles);

}  // namespace cfa
