#include "cfa/synth.hpp"

#include <charconv>
#include <cmath>
#include <random>

#include "cfa/emit.hpp"

namespace cfa {

namespace {

// (0,1) exclusive, from the top 53 bits of one mt19937_64 draw. The output
// sequence is pinned by the mt19937_64 specification, so files regenerate
// bit-identically everywhere.
double uniform_open(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

const std::vector<double>& default_accuracy_cycle() {
  static const std::vector<double> cycle = {0.93, 0.82, 0.85, 0.87};
  return cycle;
}

const std::vector<double>& default_sharpness_cycle() {
  static const std::vector<double> cycle = {6.0, 1.5, 2.0, 3.0};
  return cycle;
}

std::string item_id(Split split, std::size_t index) {
  std::string id = split == Split::Train ? "train-" : "test-";
  std::string digits = std::to_string(index + 1);
  id.append(digits.size() < 6 ? 6 - digits.size() : 0, '0');
  id += digits;
  return id;
}

ScoreTable generate_split(const SynthConfig& config, Split split, std::mt19937_64& rng) {
  ScoreTable table;
  table.split = split;
  table.labels.emplace();
  for (std::size_t j = 0; j < config.t_systems; ++j) {
    table.system_ids.push_back(default_system_id(j));
    table.columns.emplace_back();
    table.columns.back().reserve(config.n_items);
  }
  for (std::size_t i = 0; i < config.n_items; ++i) {
    table.item_ids.push_back(item_id(split, i));
    const int label = uniform_open(rng) < config.positive_fraction ? 1 : 0;
    table.labels->push_back(label);
    for (std::size_t j = 0; j < config.t_systems; ++j) {
      const bool correct = uniform_open(rng) < config.accuracy[j];
      const double margin = 0.5 * std::pow(uniform_open(rng), 1.0 / config.sharpness[j]);
      const int side = (label == 1) == correct ? 1 : -1;
      table.columns[j].push_back(0.5 + side * margin);
    }
  }
  return table;
}

std::vector<double> parse_double_list(std::string_view text, std::size_t line_no) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view field = text.substr(start, comma - start);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
      throw ParseError("unparsable number '" + std::string(field) + "'", line_no);
    }
    values.push_back(value);
    start = comma + 1;
    if (comma == text.size()) break;
  }
  return values;
}

}  // namespace

std::string default_system_id(std::size_t index) {
  if (index < 26) return std::string(1, static_cast<char>('A' + index));
  return "S" + std::to_string(index + 1);
}

SynthConfig resolve_config(SynthConfig config) {
  if (config.n_items == 0) throw ConfigError("items must be positive");
  if (config.t_systems == 0) throw ConfigError("systems must be positive");
  if (!(config.positive_fraction > 0.0 && config.positive_fraction < 1.0)) {
    throw ConfigError("positive_fraction must lie in (0,1)");
  }
  if (config.accuracy.size() > config.t_systems || config.sharpness.size() > config.t_systems) {
    throw ConfigError("more per-system values than systems");
  }
  for (std::size_t j = config.accuracy.size(); j < config.t_systems; ++j) {
    config.accuracy.push_back(default_accuracy_cycle()[j % default_accuracy_cycle().size()]);
  }
  for (std::size_t j = config.sharpness.size(); j < config.t_systems; ++j) {
    config.sharpness.push_back(default_sharpness_cycle()[j % default_sharpness_cycle().size()]);
  }
  for (const double a : config.accuracy) {
    if (!(a > 0.0 && a <= 1.0)) throw ConfigError("accuracy targets must lie in (0,1]");
  }
  for (const double s : config.sharpness) {
    if (!(s > 0.0) || !std::isfinite(s)) throw ConfigError("sharpness must be positive");
  }
  return config;
}

std::pair<ScoreTable, ScoreTable> generate(const SynthConfig& raw_config) {
  const SynthConfig config = resolve_config(raw_config);
  std::mt19937_64 rng(config.seed);
  ScoreTable train = generate_split(config, Split::Train, rng);
  ScoreTable test = generate_split(config, Split::Test, rng);
  return {std::move(train), std::move(test)};
}

ScoreTable generate_disjoint_error_fixture(std::size_t n) {
  if (n < 3 || n % 3 != 0) throw ConfigError("fixture size must be a positive multiple of 3");
  const std::size_t third = n / 3;

  ScoreTable table;
  table.split = Split::Test;
  table.labels.emplace();
  for (std::size_t j = 0; j < 3; ++j) {
    table.system_ids.push_back(default_system_id(j));
    table.columns.emplace_back(n, 0.0);
  }
  for (std::size_t i = 0; i < n; ++i) {
    table.item_ids.push_back(item_id(Split::Test, i));
    // Alternate labels within each third so every system column spans both
    // score extremes.
    const int label = (i % third) % 2 == 0 ? 1 : 0;
    table.labels->push_back(label);
    const std::size_t erring_system = i / third;
    for (std::size_t j = 0; j < 3; ++j) {
      const double margin = j == erring_system ? -0.1 : 0.4;
      table.columns[j][i] = label == 1 ? 0.5 + margin : 0.5 - margin;
    }
  }
  return table;
}

SynthConfig parse_synth_config(std::string_view text) {
  SynthConfig config;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    const std::size_t equals = line.find('=');
    if (equals == std::string_view::npos) throw ParseError("expected key=value", line_no);
    const std::string_view key = line.substr(0, equals);
    const std::string_view value = line.substr(equals + 1);

    auto parse_count = [&](std::string_view field) {
      std::size_t out = 0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
      if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw ParseError("unparsable count '" + std::string(field) + "'", line_no);
      }
      return out;
    };

    if (key == "seed") {
      std::uint64_t seed = 0;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), seed);
      if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw ParseError("unparsable seed '" + std::string(value) + "'", line_no);
      }
      config.seed = seed;
    } else if (key == "items") {
      config.n_items = parse_count(value);
    } else if (key == "systems") {
      config.t_systems = parse_count(value);
    } else if (key == "accuracy") {
      config.accuracy = parse_double_list(value, line_no);
    } else if (key == "sharpness") {
      config.sharpness = parse_double_list(value, line_no);
    } else if (key == "positive_fraction") {
      const auto values = parse_double_list(value, line_no);
      if (values.size() != 1) throw ParseError("positive_fraction takes one value", line_no);
      config.positive_fraction = values[0];
    } else {
      throw ParseError("unknown config key '" + std::string(key) + "'", line_no);
    }
  }
  return config;
}

std::string format_synth_config(const SynthConfig& config) {
  auto join = [](const std::vector<double>& values) {
    std::string out;
    for (const double v : values) {
      if (!out.empty()) out += ',';
      out += format_shortest(v);
    }
    return out;
  };
  std::string out;
  out += "seed=" + std::to_string(config.seed) + "\n";
  out += "items=" + std::to_string(config.n_items) + "\n";
  out += "systems=" + std::to_string(config.t_systems) + "\n";
  out += "accuracy=" + join(config.accuracy) + "\n";
  out += "sharpness=" + join(config.sharpness) + "\n";
  out += "positive_fraction=" + format_shortest(config.positive_fraction) + "\n";
  return out;
}

}  // namespace cfa
