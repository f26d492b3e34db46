// cfa: combinatorial fusion analysis over classifier score files.
//
// Subcommands: synth, diversity, rsc, fuse, sweep, eval. Exit codes:
// 0 success, 2 input-format error, 3 configuration error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cfa/core.hpp"
#include "cfa/diversity.hpp"
#include "cfa/emit.hpp"
#include "cfa/evaluate.hpp"
#include "cfa/fusion.hpp"
#include "cfa/ingest.hpp"
#include "cfa/ranking.hpp"
#include "cfa/sweep.hpp"
#include "cfa/synth.hpp"

namespace {

using namespace cfa;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open " + path + " for writing");
  out << content;
  if (!out) throw ConfigError("failed writing " + path);
}

ScoreTable load_table(const std::string& path, Split split) {
  ScoreTable table = read_score_file(path, split);
  const ValidationReport report = validate_table(table);
  if (!report.ok()) {
    std::string message = "invalid score file " + path + ":";
    for (const auto& violation : report.violations) message += "\n  " + violation.detail;
    throw ParseError(message);
  }
  return table;
}

std::vector<std::string> split_ids(const std::string& joined) {
  std::vector<std::string> ids;
  std::size_t start = 0;
  while (start <= joined.size()) {
    std::size_t comma = joined.find(',', start);
    if (comma == std::string::npos) comma = joined.size();
    ids.push_back(joined.substr(start, comma - start));
    start = comma + 1;
    if (comma == joined.size()) break;
  }
  return ids;
}

struct AnalysisInput {
  std::string train_path;
  std::string test_path;
  std::string split_name;  // "", "train" or "test"
};

// diversity and rsc share the load/fit logic: ranges always come from the
// train file when one is given, profiles from the requested split.
ScoreTable load_normalized_split(const AnalysisInput& input, Split* chosen) {
  if (input.train_path.empty() && input.test_path.empty()) {
    throw ConfigError("provide --train and/or --test");
  }
  Split split;
  if (input.split_name.empty()) {
    split = input.train_path.empty() ? Split::Test : Split::Train;
  } else {
    split = parse_split(input.split_name);
  }
  if (split == Split::Train && input.train_path.empty()) {
    throw ConfigError("--split train needs --train");
  }
  if (split == Split::Test && input.test_path.empty()) {
    throw ConfigError("--split test needs --test");
  }

  std::optional<ScoreTable> train;
  if (!input.train_path.empty()) train = load_table(input.train_path, Split::Train);
  std::optional<ScoreTable> test;
  if (!input.test_path.empty()) test = load_table(input.test_path, Split::Test);

  const NormalizationParams params = train ? min_max_fit(*train) : min_max_fit(*test);
  if (chosen) *chosen = split;
  return split == Split::Train ? min_max_apply(*train, params) : min_max_apply(*test, params);
}

int run(int argc, char** argv) {
  CLI::App app{"Combinatorial fusion analysis for classifier ensembles"};
  app.require_subcommand(1);

  // ---- synth ----------------------------------------------------------
  auto* synth_cmd = app.add_subcommand("synth", "Generate synthetic train/test score files");
  std::string synth_config_path;
  SynthConfig synth_config;
  std::string accuracy_list, sharpness_list;
  std::string train_out = "train.csv", test_out = "test.csv";
  synth_cmd->add_option("--config", synth_config_path, "Key=value config file");
  auto* seed_opt = synth_cmd->add_option("--seed", synth_config.seed, "Generator seed");
  auto* items_opt = synth_cmd->add_option("--items", synth_config.n_items, "Items per split");
  auto* systems_opt = synth_cmd->add_option("--systems", synth_config.t_systems, "System count");
  auto* acc_opt = synth_cmd->add_option("--accuracy", accuracy_list, "Per-system accuracy targets");
  auto* sharp_opt = synth_cmd->add_option("--sharpness", sharpness_list, "Per-system sharpness");
  auto* posfrac_opt =
      synth_cmd->add_option("--positive-fraction", synth_config.positive_fraction, "Positive label rate");
  synth_cmd->add_option("--train-out", train_out, "Train CSV path");
  synth_cmd->add_option("--test-out", test_out, "Test CSV path");

  // ---- diversity ------------------------------------------------------
  auto* div_cmd = app.add_subcommand("diversity", "Cognitive diversity matrix and strengths");
  AnalysisInput div_input;
  std::string div_out, div_ds_out;
  div_cmd->add_option("--train", div_input.train_path, "Train score CSV");
  div_cmd->add_option("--test", div_input.test_path, "Test score CSV");
  div_cmd->add_option("--split", div_input.split_name, "Which split to profile (train|test)");
  div_cmd->add_option("--out", div_out, "Matrix CSV path (default stdout)");
  div_cmd->add_option("--ds-out", div_ds_out, "Diversity strength CSV path (default stdout)");

  // ---- rsc ------------------------------------------------------------
  auto* rsc_cmd = app.add_subcommand("rsc", "Rank-score characteristic series");
  AnalysisInput rsc_input;
  std::string rsc_out, rsc_svg;
  rsc_cmd->add_option("--train", rsc_input.train_path, "Train score CSV");
  rsc_cmd->add_option("--test", rsc_input.test_path, "Test score CSV");
  rsc_cmd->add_option("--split", rsc_input.split_name, "Which split to profile (train|test)");
  rsc_cmd->add_option("--out", rsc_out, "Series CSV path (default stdout)");
  rsc_cmd->add_option("--svg", rsc_svg, "Also write an SVG line chart here");

  // ---- fuse -----------------------------------------------------------
  auto* fuse_cmd = app.add_subcommand("fuse", "Fuse one subset under one method");
  std::string fuse_train, fuse_test, fuse_systems, fuse_method = "asc";
  std::string fuse_weight_split = "train", fuse_rc = "reciprocal", fuse_ties = "ordinal";
  std::string fuse_out = "predictions.csv", fuse_metrics_out;
  double fuse_threshold = 0.5;
  bool fuse_no_eval = false;
  fuse_cmd->add_option("--train", fuse_train, "Train score CSV")->required();
  fuse_cmd->add_option("--test", fuse_test, "Test score CSV")->required();
  fuse_cmd->add_option("--systems", fuse_systems, "Comma-separated system ids")->required();
  fuse_cmd->add_option("--method", fuse_method, "asc|arc|wcp-sc|wcp-rc|wcds-sc|wcds-rc");
  fuse_cmd->add_option("--weight-split", fuse_weight_split, "train|test");
  fuse_cmd->add_option("--threshold", fuse_threshold, "Score decision threshold");
  fuse_cmd->add_option("--rc-weighting", fuse_rc, "reciprocal|direct");
  fuse_cmd->add_option("--tie-policy", fuse_ties, "ordinal|average");
  fuse_cmd->add_option("--out", fuse_out, "Predictions CSV path");
  fuse_cmd->add_option("--metrics-out", fuse_metrics_out, "Metrics JSON path (default stdout)");
  fuse_cmd->add_flag("--no-eval", fuse_no_eval, "Skip evaluation (test labels not needed)");

  // ---- sweep ----------------------------------------------------------
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate every subset under every method");
  std::string sweep_train, sweep_test, sweep_rc = "reciprocal", sweep_ties = "ordinal", sweep_out;
  double sweep_threshold = 0.5;
  sweep_cmd->add_option("--train", sweep_train, "Train score CSV")->required();
  sweep_cmd->add_option("--test", sweep_test, "Test score CSV")->required();
  sweep_cmd->add_option("--threshold", sweep_threshold, "Score decision threshold");
  sweep_cmd->add_option("--rc-weighting", sweep_rc, "reciprocal|direct");
  sweep_cmd->add_option("--tie-policy", sweep_ties, "ordinal|average");
  sweep_cmd->add_option("--out", sweep_out, "Report CSV path (default stdout)");

  // ---- eval -----------------------------------------------------------
  auto* eval_cmd = app.add_subcommand("eval", "Metrics from an existing predictions CSV");
  std::string eval_pred, eval_out;
  eval_cmd->add_option("--pred", eval_pred, "Predictions CSV from a fuse run")->required();
  eval_cmd->add_option("--out", eval_out, "Metrics JSON path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 3;
  }

  if (synth_cmd->parsed()) {
    SynthConfig config;
    if (!synth_config_path.empty()) {
      std::ifstream in(synth_config_path, std::ios::binary);
      if (!in) throw ParseError("cannot open " + synth_config_path);
      std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      config = parse_synth_config(text);
    }
    if (seed_opt->count()) config.seed = synth_config.seed;
    if (items_opt->count()) config.n_items = synth_config.n_items;
    if (systems_opt->count()) config.t_systems = synth_config.t_systems;
    auto parse_list = [](const std::string& text) {
      std::vector<double> values;
      for (const auto& field : split_ids(text)) {
        try {
          std::size_t used = 0;
          values.push_back(std::stod(field, &used));
          if (used != field.size()) throw std::invalid_argument(field);
        } catch (const std::exception&) {
          throw ConfigError("unparsable number '" + field + "'");
        }
      }
      return values;
    };
    if (acc_opt->count()) config.accuracy = parse_list(accuracy_list);
    if (sharp_opt->count()) config.sharpness = parse_list(sharpness_list);
    if (posfrac_opt->count()) config.positive_fraction = synth_config.positive_fraction;

    config = resolve_config(config);
    const auto [train, test] = generate(config);
    write_output(train_out, write_score_file(train));
    write_output(test_out, write_score_file(test));
    std::cout << format_synth_config(config);
    return 0;
  }

  if (div_cmd->parsed()) {
    Split split;
    const ScoreTable table = load_normalized_split(div_input, &split);
    if (table.system_count() < 2) throw ConfigError("diversity needs at least two systems");
    const DiversityMatrix matrix = diversity_matrix(rsc_profiles(table), split);
    const WeightVector strengths = diversity_strength(matrix);
    if (strengths.fallback_equal) {
      std::cerr << "warning: all systems have identical profiles; diversity strengths degenerate to equal weights\n";
    }
    write_output(div_out, write_diversity_csv(matrix));
    write_output(div_ds_out, write_ds_csv(strengths));
    return 0;
  }

  if (rsc_cmd->parsed()) {
    const ScoreTable table = load_normalized_split(rsc_input, nullptr);
    const std::vector<RscProfile> profiles = rsc_profiles(table);
    write_output(rsc_out, write_rsc_csv(profiles));
    if (!rsc_svg.empty()) write_output(rsc_svg, write_rsc_svg(profiles));
    return 0;
  }

  if (fuse_cmd->parsed()) {
    const std::vector<std::string> subset = split_ids(fuse_systems);
    if (subset.size() < 2) throw ConfigError("--systems needs at least two ids");
    PipelineOptions options;
    options.threshold = fuse_threshold;
    options.rc_weighting = parse_rc_weighting(fuse_rc);
    options.tie_policy = parse_tie_policy(fuse_ties);
    const Method method = parse_method(fuse_method);
    const Split weight_split = parse_split(fuse_weight_split);

    FusionPipeline pipeline(load_table(fuse_train, Split::Train), load_table(fuse_test, Split::Test),
                            options);
    const bool want_eval = !fuse_no_eval;
    const FuseOutcome outcome = pipeline.run_cell(subset, method, weight_split, want_eval);
    if (outcome.weights.fallback_equal) {
      std::cerr << "warning: diversity strengths degenerate to equal weights for this subset\n";
    }

    write_output(fuse_out, write_predictions_csv(pipeline.test().item_ids, pipeline.test().labels,
                                                 outcome.fused.values, outcome.predictions));
    if (want_eval) {
      ReportRow row;
      row.systems = join_systems(subset);
      row.method_name = to_string(method);
      const bool weighted = method != Method::ASC && method != Method::ARC;
      if (weighted) {
        row.weight_split = weight_split;
        row.transductive = weight_split == Split::Test;
      }
      row.report = *outcome.report;
      write_output(fuse_metrics_out,
                   write_metrics_json(row, fuse_threshold, outcome.fused.provenance.positive_prior,
                                      options.rc_weighting, options.tie_policy));
    }
    return 0;
  }

  if (sweep_cmd->parsed()) {
    PipelineOptions options;
    options.threshold = sweep_threshold;
    options.rc_weighting = parse_rc_weighting(sweep_rc);
    options.tie_policy = parse_tie_policy(sweep_ties);
    const std::vector<ReportRow> rows =
        sweep(load_table(sweep_train, Split::Train), load_table(sweep_test, Split::Test), options);
    write_output(sweep_out, write_report_csv(rows));
    return 0;
  }

  if (eval_cmd->parsed()) {
    std::ifstream in(eval_pred, std::ios::binary);
    if (!in) throw ParseError("cannot open " + eval_pred);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    std::vector<int> labels, predictions;
    std::size_t pos = 0, line_no = 0;
    bool saw_header = false;
    while (pos < text.size()) {
      std::size_t eol = text.find('\n', pos);
      if (eol == std::string::npos) eol = text.size();
      std::string line = text.substr(pos, eol - pos);
      pos = eol + 1;
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const std::vector<std::string> fields = split_ids(line);
      if (!saw_header) {
        if (fields.size() != 4 || fields[0] != "item_id" || fields[1] != "label" ||
            fields[2] != "fused_value" || fields[3] != "prediction") {
          throw ParseError("malformed predictions header", line_no);
        }
        saw_header = true;
        continue;
      }
      if (fields.size() != 4) throw ParseError("malformed predictions row", line_no);
      if (fields[1].empty()) throw ConfigError("predictions file has no labels; nothing to evaluate");
      if (fields[1] != "0" && fields[1] != "1") throw ParseError("invalid label", line_no);
      if (fields[3] != "0" && fields[3] != "1") throw ParseError("invalid prediction", line_no);
      labels.push_back(fields[1] == "1");
      predictions.push_back(fields[3] == "1");
    }
    if (!saw_header) throw ParseError("empty predictions file", 1);
    const EvalReport report = compute_metrics(predictions, labels);
    write_output(eval_out, write_eval_json(report));
    return 0;
  }

  return 3;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const cfa::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cfa::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
