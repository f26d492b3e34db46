#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "cfa/core.hpp"

namespace test_helpers {

inline cfa::ScoreTable make_table(std::vector<std::string> system_ids,
                                  std::vector<std::vector<double>> columns,
                                  std::optional<std::vector<int>> labels = std::nullopt,
                                  cfa::Split split = cfa::Split::Train) {
  cfa::ScoreTable table;
  table.split = split;
  table.system_ids = std::move(system_ids);
  table.columns = std::move(columns);
  table.labels = std::move(labels);
  const std::size_t n = table.columns.empty() ? 0 : table.columns.front().size();
  for (std::size_t i = 0; i < n; ++i) table.item_ids.push_back("i" + std::to_string(i + 1));
  return table;
}

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct RandomInstance {
  cfa::ScoreTable train;
  cfa::ScoreTable test;
};

// Small raw-scale instances: t in [2,4], n in [2,8] per split, scores in
// [-5,5), labels guaranteed to contain both classes. A third of instances
// snap scores to a coarse grid so ties and clamp collisions are exercised.
inline RandomInstance make_instance(std::mt19937_64& rng) {
  const std::size_t t = 2 + rng() % 3;
  const std::size_t n_train = 2 + rng() % 7;
  const std::size_t n_test = 2 + rng() % 7;
  const bool quantize = rng() % 3 == 0;

  auto draw_score = [&]() {
    double value = uniform01(rng) * 10.0 - 5.0;
    if (quantize) value = std::floor(value * 1.6) / 1.6;
    return value;
  };

  auto build = [&](cfa::Split split, std::size_t n, const char* prefix) {
    cfa::ScoreTable table;
    table.split = split;
    table.labels.emplace();
    for (std::size_t j = 0; j < t; ++j) {
      table.system_ids.push_back(std::string(1, static_cast<char>('A' + j)));
      table.columns.emplace_back();
    }
    for (std::size_t i = 0; i < n; ++i) {
      table.item_ids.push_back(prefix + std::to_string(i + 1));
      int label;
      if (i == 0) label = 1;
      else if (i == 1) label = 0;
      else label = uniform01(rng) < 0.5 ? 1 : 0;
      table.labels->push_back(label);
      for (std::size_t j = 0; j < t; ++j) table.columns[j].push_back(draw_score());
    }
    return table;
  };

  RandomInstance instance;
  instance.train = build(cfa::Split::Train, n_train, "tr");
  instance.test = build(cfa::Split::Test, n_test, "te");
  return instance;
}

}  // namespace test_helpers
