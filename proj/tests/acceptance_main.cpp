// Acceptance suite. Each numbered check prints exactly one [PASS]/[FAIL]
// line; the process exits nonzero if any check fails.

#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cfa/emit.hpp"
#include "cfa/sweep.hpp"
#include "cfa/synth.hpp"
#include "oracle.hpp"

namespace fs = std::filesystem;
using namespace cfa;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail = "") {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << criterion << " " << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!pass) ++g_failures;
}

std::string fixture(const std::string& name) { return std::string(CFA_FIXTURES_DIR) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "<unreadable:" + path + ">";
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// ---------------------------------------------------------------------
// 1. published per-model F1 values follow from their precision/recall
// ---------------------------------------------------------------------
void criterion_1() {
  struct Row {
    double precision, recall, f1;
  };
  const std::vector<Row> rows = {
      {0.936313, 0.95856, 0.947306},   // strongest transformer baseline
      {0.843940, 0.82112, 0.832374},   // linear-kernel SVM
      {0.842211, 0.87024, 0.855996},   // gradient boosting
      {0.854531, 0.87128, 0.862824},   // random forest
  };
  double max_diff = 0.0;
  for (const auto& row : rows) {
    max_diff = std::max(max_diff, std::abs(f1_from_pr(row.precision, row.recall) - row.f1));
  }
  report(1, "per-model F1 consistency", max_diff < 1e-5,
         "max diff " + format_shortest(max_diff));
}

// ---------------------------------------------------------------------
// 2. oracle equivalence over randomized instances
// ---------------------------------------------------------------------
ScoreTable random_table(std::mt19937_64& rng, Split split, std::size_t t, std::size_t n,
                        bool quantize, const char* prefix) {
  ScoreTable table;
  table.split = split;
  table.labels.emplace();
  for (std::size_t j = 0; j < t; ++j) {
    table.system_ids.push_back(std::string(1, static_cast<char>('A' + j)));
    table.columns.emplace_back();
  }
  for (std::size_t i = 0; i < n; ++i) {
    table.item_ids.push_back(prefix + std::to_string(i + 1));
    int label = i == 0 ? 1 : (i == 1 ? 0 : (uniform01(rng) < 0.5 ? 1 : 0));
    table.labels->push_back(label);
    for (std::size_t j = 0; j < t; ++j) {
      double value = uniform01(rng) * 10.0 - 5.0;
      if (quantize) value = std::floor(value * 1.6) / 1.6;
      table.columns[j].push_back(value);
    }
  }
  return table;
}

void criterion_2() {
  std::mt19937_64 rng(424242);
  const int instances = 1000;
  double max_diff = 0.0;
  long long cells_compared = 0;
  long long matched_errors = 0;
  std::string failure;

  const auto started = std::chrono::steady_clock::now();
  for (int trial = 0; trial < instances && failure.empty(); ++trial) {
    const std::size_t t = 2 + rng() % 3;
    const bool quantize = rng() % 3 == 0;
    const ScoreTable train = random_table(rng, Split::Train, t, 2 + rng() % 7, quantize, "tr");
    const ScoreTable test = random_table(rng, Split::Test, t, 2 + rng() % 7, quantize, "te");

    std::vector<std::string> subset;
    const std::size_t want = 2 + rng() % (t - 1);
    for (std::size_t j = 0; j < t && subset.size() < want; ++j) {
      if (t - j <= want - subset.size() || rng() % 2 == 0) subset.push_back(train.system_ids[j]);
    }

    for (const RcWeighting rc : {RcWeighting::Reciprocal, RcWeighting::Direct}) {
      PipelineOptions options;
      options.rc_weighting = rc;
      FusionPipeline pipeline(train, test, options);

      auto check_cell = [&](Method method, Split split) {
        bool main_threw = false, oracle_threw = false;
        FuseOutcome outcome;
        oracle::Result expected;
        try {
          outcome = pipeline.run_cell(subset, method, split, true);
        } catch (const ConfigError&) {
          main_threw = true;
        }
        try {
          expected = oracle::fuse(train, test, subset, method, split, 0.5, rc,
                                  TiePolicy::StableOrdinal, true);
        } catch (const ConfigError&) {
          oracle_threw = true;
        }
        if (main_threw != oracle_threw) {
          failure = "error behavior diverged on trial " + std::to_string(trial);
          return;
        }
        if (main_threw) {
          ++matched_errors;
          return;
        }
        for (std::size_t i = 0; i < expected.fused.size(); ++i) {
          max_diff = std::max(max_diff, std::abs(outcome.fused.values[i] - expected.fused[i]));
        }
        if (outcome.predictions != expected.predictions) {
          failure = "prediction mismatch on trial " + std::to_string(trial);
          return;
        }
        max_diff = std::max(max_diff, std::abs(outcome.report->accuracy - expected.accuracy));
        max_diff = std::max(max_diff, std::abs(outcome.report->precision - expected.precision));
        max_diff = std::max(max_diff, std::abs(outcome.report->recall - expected.recall));
        max_diff = std::max(max_diff, std::abs(outcome.report->f1 - expected.f1));
        ++cells_compared;
      };

      check_cell(Method::ASC, Split::Train);
      check_cell(Method::ARC, Split::Train);
      for (const Method method : {Method::WCP_SC, Method::WCP_RC, Method::WCDS_SC, Method::WCDS_RC}) {
        check_cell(method, Split::Train);
        check_cell(method, Split::Test);
      }
      if (!failure.empty()) break;
    }
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);

  const bool pass = failure.empty() && max_diff < 1e-12 && cells_compared > 15000 &&
                    elapsed.count() < 60000;
  report(2, "oracle equivalence over 1000 random instances", pass,
         failure.empty()
             ? "cells " + std::to_string(cells_compared) + ", matched errors " +
                   std::to_string(matched_errors) + ", max diff " + format_shortest(max_diff) + ", " +
                   std::to_string(elapsed.count()) + " ms"
             : failure);
}

// ---------------------------------------------------------------------
// 3. disjoint-error fixture: bases at exactly 2/3, fused variants at 1
// ---------------------------------------------------------------------
void criterion_3() {
  const ScoreTable fixture_table = generate_disjoint_error_fixture(300);
  FusionPipeline pipeline(fixture_table, fixture_table, PipelineOptions{});

  bool pass = true;
  std::string detail;
  const ScoreTable& test = pipeline.test();
  for (std::size_t j = 0; j < 3; ++j) {
    std::size_t correct = 0;
    for (std::size_t i = 0; i < test.item_count(); ++i) {
      const int predicted = test.columns[j][i] >= 0.5 ? 1 : 0;
      if (predicted == (*test.labels)[i]) ++correct;
    }
    const double accuracy = static_cast<double>(correct) / static_cast<double>(test.item_count());
    if (accuracy != 2.0 / 3.0) {
      pass = false;
      detail = "base " + test.system_ids[j] + " accuracy " + format_shortest(accuracy);
    }
  }

  const auto asc = pipeline.run_cell({"A", "B", "C"}, Method::ASC, Split::Train, true);
  if (asc.report->accuracy != 1.0) {
    pass = false;
    detail = "ASC accuracy " + format_shortest(asc.report->accuracy);
  }
  for (const Split split : {Split::Train, Split::Test}) {
    const auto wcds = pipeline.run_cell({"A", "B", "C"}, Method::WCDS_SC, split, true);
    if (wcds.report->accuracy != 1.0) {
      pass = false;
      detail = "WCDS-SC(" + to_string(split) + ") accuracy " + format_shortest(wcds.report->accuracy);
    }
  }
  report(3, "disjoint-error fixture recovers every item", pass, detail);
}

// ---------------------------------------------------------------------
// 4. degeneracy: equal strengths reduce to averaging, clones are fixed
// ---------------------------------------------------------------------
void criterion_4() {
  bool pass = true;
  std::string detail;

  {
    // two systems always have pairwise-identical diversity strengths
    SynthConfig config;
    config.n_items = 120;
    config.t_systems = 2;
    config.seed = 99;
    const auto [train, test] = generate(config);
    FusionPipeline pipeline(train, test, PipelineOptions{});
    const auto asc = pipeline.run_cell({"A", "B"}, Method::ASC, Split::Train, true);
    for (const Split split : {Split::Train, Split::Test}) {
      const auto wcds = pipeline.run_cell({"A", "B"}, Method::WCDS_SC, split, true);
      for (std::size_t i = 0; i < asc.fused.values.size(); ++i) {
        if (std::abs(wcds.fused.values[i] - asc.fused.values[i]) > 1e-12) {
          pass = false;
          detail = "WCDS-SC departed from ASC at item " + std::to_string(i);
        }
      }
    }
  }

  {
    std::vector<double> train_col{0.8, 0.3, 0.6, 0.2, 0.9, 0.4};
    std::vector<double> test_col{0.7, 0.1, 0.55, 0.35};
    ScoreTable train, test;
    train.split = Split::Train;
    test.split = Split::Test;
    train.labels = std::vector<int>{1, 0, 1, 0, 1, 0};
    test.labels = std::vector<int>{1, 0, 1, 0};
    for (std::size_t j = 0; j < 3; ++j) {
      const auto id = std::string(1, static_cast<char>('A' + j));
      train.system_ids.push_back(id);
      test.system_ids.push_back(id);
      train.columns.push_back(train_col);
      test.columns.push_back(test_col);
    }
    for (std::size_t i = 0; i < train_col.size(); ++i) train.item_ids.push_back("tr" + std::to_string(i));
    for (std::size_t i = 0; i < test_col.size(); ++i) test.item_ids.push_back("te" + std::to_string(i));

    FusionPipeline pipeline(train, test, PipelineOptions{});
    const auto& normalized = pipeline.test().columns[0];
    const auto expected_ranks = scores_to_ranks(normalized, TiePolicy::StableOrdinal);
    for (const Method method : {Method::ASC, Method::ARC, Method::WCP_SC, Method::WCP_RC,
                                Method::WCDS_SC, Method::WCDS_RC}) {
      for (const Split split : {Split::Train, Split::Test}) {
        const auto outcome = pipeline.run_cell({"A", "B", "C"}, method, split, true);
        const std::vector<double>& target =
            is_score_method(method) ? normalized : expected_ranks;
        for (std::size_t i = 0; i < target.size(); ++i) {
          if (std::abs(outcome.fused.values[i] - target[i]) > 1e-12) {
            pass = false;
            detail = to_string(method) + " did not fix identical systems";
          }
        }
      }
    }
  }
  report(4, "degenerate ensembles collapse as expected", pass, detail);
}

// ---------------------------------------------------------------------
// 5. sweep combinatorics
// ---------------------------------------------------------------------
void criterion_5() {
  auto count_rows = [](std::size_t t, std::uint64_t seed) {
    SynthConfig config;
    config.n_items = 30;
    config.t_systems = t;
    config.seed = seed;
    const auto [train, test] = generate(config);
    const auto rows = sweep(train, test, PipelineOptions{});
    std::pair<std::size_t, std::size_t> counts{0, 0};
    for (const auto& row : rows) {
      row.method_name == "SINGLE" ? ++counts.second : ++counts.first;
    }
    return counts;
  };
  const auto four = count_rows(4, 1);
  const auto two = count_rows(2, 2);
  const bool pass = four == std::pair<std::size_t, std::size_t>{110, 4} &&
                    two == std::pair<std::size_t, std::size_t>{10, 2};
  report(5, "sweep emits 110+4 rows for t=4 and 10+2 for t=2", pass,
         "t=4: " + std::to_string(four.first) + "+" + std::to_string(four.second) +
             ", t=2: " + std::to_string(two.first) + "+" + std::to_string(two.second));
}

// ---------------------------------------------------------------------
// 6. golden end-to-end through the CLI binary
// ---------------------------------------------------------------------
void criterion_6() {
  const fs::path dir = fs::temp_directory_path() / ("cfa_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string train = (dir / "train.csv").string();
  const std::string test = (dir / "test.csv").string();
  const std::string sweep_out = (dir / "report.csv").string();

  auto shell = [](const std::string& command) {
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };

  bool pass = true;
  std::string detail;
  if (shell(std::string(CFA_BIN_PATH) + " synth --config " + fixture("synth_seed42.cfg") +
            " --train-out " + train + " --test-out " + test + " > /dev/null") != 0) {
    pass = false;
    detail = "synth failed";
  }
  if (pass && read_file(train) != read_file(fixture("synth_seed42_train.csv"))) {
    pass = false;
    detail = "train bytes diverged";
  }
  if (pass && read_file(test) != read_file(fixture("synth_seed42_test.csv"))) {
    pass = false;
    detail = "test bytes diverged";
  }
  if (pass && shell(std::string(CFA_BIN_PATH) + " sweep --train " + train + " --test " + test +
                    " --out " + sweep_out) != 0) {
    pass = false;
    detail = "sweep failed";
  }
  if (pass && read_file(sweep_out) != read_file(fixture("golden_sweep_seed42.csv"))) {
    pass = false;
    detail = "report bytes diverged";
  }
  report(6, "seed-42 synth+sweep matches the committed golden byte-for-byte", pass, detail);
}

// ---------------------------------------------------------------------
// 7. scale: 25k items, 4 systems, full sweep
// ---------------------------------------------------------------------
void criterion_7() {
  SynthConfig config;
  config.n_items = 25000;
  config.t_systems = 4;
  config.seed = 1337;
  const auto [train, test] = generate(config);

  const auto started = std::chrono::steady_clock::now();
  const auto rows = sweep(train, test, PipelineOptions{});
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);

  struct rusage usage {};
  getrusage(RUSAGE_SELF, &usage);
  const double peak_gb = static_cast<double>(usage.ru_maxrss) / (1024.0 * 1024.0);

  const bool pass = rows.size() == 114 && elapsed.count() < 10000 && peak_gb < 1.0;
  report(7, "25k-item sweep stays under 10 s and 1 GB", pass,
         std::to_string(rows.size()) + " rows, " + std::to_string(elapsed.count()) + " ms, peak " +
             format_fixed6(peak_gb) + " GB");
}

// ---------------------------------------------------------------------
// 8. invariant property suite
// ---------------------------------------------------------------------
void criterion_8() {
  std::mt19937_64 rng(808080);
  std::string failure;
  const int cases = 500;

  auto random_column = [&](std::size_t n, bool grid) {
    std::vector<double> column;
    for (std::size_t i = 0; i < n; ++i) {
      const double u = uniform01(rng);
      column.push_back(grid ? std::floor(u * 32.0) / 32.0 : u);
    }
    return column;
  };

  // ordinal ranks are a permutation of 1..n
  for (int c = 0; c < cases && failure.empty(); ++c) {
    const std::size_t n = 1 + rng() % 24;
    auto ranks = scores_to_ranks(random_column(n, c % 2 == 0), TiePolicy::StableOrdinal);
    std::sort(ranks.begin(), ranks.end());
    for (std::size_t i = 0; i < n; ++i) {
      if (ranks[i] != static_cast<double>(i + 1)) failure = "rank permutation";
    }
  }

  // profiles are monotone non-increasing and permutation-invariant
  for (int c = 0; c < cases && failure.empty(); ++c) {
    const std::size_t n = 1 + rng() % 24;
    auto column = random_column(n, c % 3 == 0);
    const auto profile = rsc_profile("A", column);
    for (std::size_t i = 1; i < n; ++i) {
      if (profile.values[i - 1] < profile.values[i]) failure = "profile monotonicity";
    }
    std::shuffle(column.begin(), column.end(), rng);
    if (rsc_profile("A", column).values != profile.values) failure = "profile permutation invariance";
  }

  // cognitive diversity: symmetry, triangle inequality, permutation
  // invariance of the underlying columns
  for (int c = 0; c < cases && failure.empty(); ++c) {
    const std::size_t n = 1 + rng() % 16;
    auto col_a = random_column(n, false);
    const auto col_b = random_column(n, false);
    const auto col_c = random_column(n, false);
    const auto a = rsc_profile("A", col_a);
    const auto b = rsc_profile("B", col_b);
    const auto cc = rsc_profile("C", col_c);
    const double ab = cognitive_diversity(a, b);
    const double bc = cognitive_diversity(b, cc);
    const double ac = cognitive_diversity(a, cc);
    if (ab != cognitive_diversity(b, a)) failure = "cd symmetry";
    if (ab < 0.0) failure = "cd non-negativity";
    if (ac > ab + bc + 1e-12) failure = "cd triangle inequality";
    std::shuffle(col_a.begin(), col_a.end(), rng);
    if (cognitive_diversity(rsc_profile("A", col_a), b) != ab) failure = "cd permutation invariance";
  }

  // rank combination is invariant under strictly increasing transforms of
  // any single system's raw scores
  for (int c = 0; c < cases && failure.empty(); ++c) {
    const std::size_t n = 3 + rng() % 6;
    std::vector<std::vector<double>> train_cols{random_column(n, true), random_column(n, true)};
    std::vector<std::vector<double>> test_cols{random_column(n, true), random_column(n, true)};
    std::vector<int> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(i % 2 == 0 ? 1 : 0);

    auto build = [&](const std::vector<std::vector<double>>& cols, Split split, const char* prefix) {
      ScoreTable table;
      table.split = split;
      table.labels = labels;
      table.system_ids = {"A", "B"};
      table.columns = cols;
      for (std::size_t i = 0; i < n; ++i) table.item_ids.push_back(prefix + std::to_string(i));
      return table;
    };
    auto run = [&](const std::vector<std::vector<double>>& tr, const std::vector<std::vector<double>>& te) {
      FusionPipeline pipeline(build(tr, Split::Train, "tr"), build(te, Split::Test, "te"),
                              PipelineOptions{});
      return pipeline.run_cell({"A", "B"}, Method::ARC, Split::Train, false);
    };
    const auto base = run(train_cols, test_cols);
    const std::size_t target = rng() % 2;
    auto transform = [](double x) { return std::exp(1.5 * x) + 2.0 * x; };
    for (double& v : train_cols[target]) v = transform(v);
    for (double& v : test_cols[target]) v = transform(v);
    const auto transformed = run(train_cols, test_cols);
    if (base.fused.values != transformed.fused.values) failure = "rc monotone-transform invariance";
  }

  // score combinations stay inside the per-item envelope
  for (int c = 0; c < cases && failure.empty(); ++c) {
    const std::size_t t = 2 + rng() % 3;
    const std::size_t n = 1 + rng() % 12;
    std::vector<std::vector<double>> columns;
    WeightVector weights;
    weights.kind = WeightKind::DiversityStrength;
    for (std::size_t j = 0; j < t; ++j) {
      columns.push_back(random_column(n, false));
      weights.system_ids.push_back(std::string(1, static_cast<char>('A' + j)));
      weights.weights.push_back(0.01 + uniform01(rng));
    }
    std::vector<std::span<const double>> views;
    for (const auto& column : columns) views.emplace_back(column);
    const auto fused = combine_scores(views, weights);
    for (std::size_t i = 0; i < n; ++i) {
      double lo = columns[0][i], hi = columns[0][i];
      for (std::size_t j = 1; j < t; ++j) {
        lo = std::min(lo, columns[j][i]);
        hi = std::max(hi, columns[j][i]);
      }
      if (fused.values[i] < lo - 1e-15 || fused.values[i] > hi + 1e-15) failure = "sc convexity bound";
    }
  }

  report(8, "invariant property suite (500 cases per law)", failure.empty(), failure);
}

}  // namespace

int main() {
  std::cout << "=== acceptance suite ===\n";
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (g_failures > 0) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
