#include "cfa/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "cfa/emit.hpp"

namespace cfa {

namespace {

// Splits one line on commas. No quoting in this grammar, so this is exact.
std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

double parse_score(std::string_view field, std::size_t line_no, std::string_view system) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError("unparsable score '" + std::string(field) + "' for system " + std::string(system),
                     line_no);
  }
  return value;
}

}  // namespace

ScoreTable parse_score_file(std::string_view text, Split split) {
  ScoreTable table;
  table.split = split;

  std::size_t pos = 0;
  std::size_t line_no = 0;
  bool saw_header = false;
  bool labels_present = false;

  while (pos < text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line;
    if (eol == std::string_view::npos) {
      line = text.substr(pos);
      pos = text.size();
    } else {
      line = text.substr(pos, eol - pos);
      pos = eol + 1;
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;

    const auto fields = split_fields(line);
    if (!saw_header) {
      if (fields.size() < 3 || fields[0] != "item_id" || fields[1] != "label") {
        throw ParseError("malformed header (expected item_id,label,<sys1>,...)", line_no);
      }
      for (std::size_t j = 2; j < fields.size(); ++j) {
        table.system_ids.emplace_back(fields[j]);
        table.columns.emplace_back();
      }
      saw_header = true;
      continue;
    }

    const std::size_t expected = 2 + table.system_count();
    if (fields.size() != expected) {
      throw ParseError("row has " + std::to_string(fields.size()) + " fields, expected " +
                           std::to_string(expected),
                       line_no);
    }

    const bool first_row = table.item_ids.empty();
    table.item_ids.emplace_back(fields[0]);

    const std::string_view label_field = fields[1];
    if (first_row) {
      labels_present = !label_field.empty();
      if (labels_present) table.labels.emplace();
    }
    if (labels_present == label_field.empty()) {
      throw ParseError("mixed present/absent labels", line_no);
    }
    if (labels_present) {
      if (label_field == "0") {
        table.labels->push_back(0);
      } else if (label_field == "1") {
        table.labels->push_back(1);
      } else {
        throw ParseError("invalid label '" + std::string(label_field) + "' (expected 0, 1 or empty)",
                         line_no);
      }
    }

    for (std::size_t j = 0; j < table.system_count(); ++j) {
      table.columns[j].push_back(parse_score(fields[2 + j], line_no, table.system_ids[j]));
    }
  }

  if (!saw_header) throw ParseError("empty input, expected a header line", 1);
  return table;
}

std::string write_score_file(const ScoreTable& table) {
  std::string out = "item_id,label";
  for (const auto& id : table.system_ids) {
    out += ',';
    out += id;
  }
  out += '\n';
  for (std::size_t i = 0; i < table.item_count(); ++i) {
    out += table.item_ids[i];
    out += ',';
    if (table.labels) out += (*table.labels)[i] ? '1' : '0';
    for (std::size_t j = 0; j < table.system_count(); ++j) {
      out += ',';
      out += format_shortest(table.columns[j][i]);
    }
    out += '\n';
  }
  return out;
}

ScoreTable read_score_file(const std::string& path, Split split) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_score_file(buffer.str(), split);
}

NormalizationParams min_max_fit(const ScoreTable& train) {
  if (train.item_count() == 0) throw ConfigError("cannot fit normalization on an empty table");
  NormalizationParams params;
  for (std::size_t j = 0; j < train.system_count(); ++j) {
    const auto [lo, hi] = std::minmax_element(train.columns[j].begin(), train.columns[j].end());
    params.by_system[train.system_ids[j]] = {*lo, *hi};
  }
  return params;
}

ScoreTable min_max_apply(const ScoreTable& table, const NormalizationParams& params) {
  ScoreTable out = table;
  for (std::size_t j = 0; j < table.system_count(); ++j) {
    const auto it = params.by_system.find(table.system_ids[j]);
    if (it == params.by_system.end()) {
      throw ConfigError("no normalization range for system " + table.system_ids[j]);
    }
    const auto [lo, hi] = it->second;
    for (double& value : out.columns[j]) {
      if (lo == hi) {
        value = 0.5;  // a constant scorer carries no ordering information
      } else {
        value = (value - lo) / (hi - lo);
        if (value < 0.0) value = 0.0;
        if (value > 1.0) value = 1.0;
      }
    }
  }
  out.normalized = true;
  return out;
}

}  // namespace cfa
