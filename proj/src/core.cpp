#include "cfa/core.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <unordered_set>

namespace cfa {

std::size_t ScoreTable::system_index(std::string_view id) const {
  for (std::size_t j = 0; j < system_ids.size(); ++j) {
    if (system_ids[j] == id) return j;
  }
  throw ConfigError("unknown system " + std::string(id));
}

ValidationReport validate_table(const ScoreTable& table) {
  ValidationReport report;
  const std::size_t n = table.item_count();
  const std::size_t t = table.system_count();

  {
    std::unordered_set<std::string_view> seen;
    for (std::size_t i = 0; i < n; ++i) {
      if (!seen.insert(table.item_ids[i]).second) {
        report.violations.push_back(
            {"duplicate-item-id", "item id '" + table.item_ids[i] + "' repeats at row " + std::to_string(i),
             i, Violation::npos});
      }
    }
  }
  {
    std::unordered_set<std::string_view> seen;
    for (std::size_t j = 0; j < t; ++j) {
      if (table.system_ids[j].empty()) {
        report.violations.push_back({"empty-system-id", "system " + std::to_string(j) + " has an empty name",
                                     Violation::npos, j});
      }
      if (!seen.insert(table.system_ids[j]).second) {
        report.violations.push_back(
            {"duplicate-system-id", "system id '" + table.system_ids[j] + "' repeats", Violation::npos, j});
      }
    }
  }

  if (table.columns.size() != t) {
    report.violations.push_back(
        {"shape", "table has " + std::to_string(table.columns.size()) + " score columns for " +
                      std::to_string(t) + " systems",
         Violation::npos, Violation::npos});
    return report;  // coordinates below would be meaningless
  }
  for (std::size_t j = 0; j < t; ++j) {
    if (table.columns[j].size() != n) {
      report.violations.push_back(
          {"shape", "system " + table.system_ids[j] + " has " + std::to_string(table.columns[j].size()) +
                        " scores for " + std::to_string(n) + " items",
           Violation::npos, j});
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::isfinite(table.columns[j][i])) {
        report.violations.push_back(
            {"non-finite-score", "non-finite score at row " + std::to_string(i) + ", system " + table.system_ids[j],
             i, j});
      }
    }
  }

  if (table.labels) {
    if (table.labels->size() != n) {
      report.violations.push_back(
          {"partial-labels", "labels cover " + std::to_string(table.labels->size()) + " of " +
                                 std::to_string(n) + " items",
           Violation::npos, Violation::npos});
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        const int label = (*table.labels)[i];
        if (label != 0 && label != 1) {
          report.violations.push_back(
              {"bad-label", "label at row " + std::to_string(i) + " is " + std::to_string(label), i,
               Violation::npos});
        }
      }
    }
  }
  return report;
}

ScoreTable select_systems(const ScoreTable& table, const std::vector<std::string>& subset) {
  if (subset.empty()) throw ConfigError("system selection is empty");
  ScoreTable out;
  out.split = table.split;
  out.item_ids = table.item_ids;
  out.labels = table.labels;
  out.normalized = table.normalized;
  std::unordered_set<std::string_view> seen;
  for (const auto& id : subset) {
    if (!seen.insert(id).second) throw ConfigError("system " + id + " selected twice");
    const std::size_t j = table.system_index(id);
    out.system_ids.push_back(table.system_ids[j]);
    out.columns.push_back(table.columns[j]);
  }
  return out;
}

std::string to_string(Method method) {
  switch (method) {
    case Method::ASC: return "ASC";
    case Method::ARC: return "ARC";
    case Method::WCP_SC: return "WCP-SC";
    case Method::WCP_RC: return "WCP-RC";
    case Method::WCDS_SC: return "WCDS-SC";
    case Method::WCDS_RC: return "WCDS-RC";
  }
  return "?";
}

std::string to_string(Split split) { return split == Split::Train ? "train" : "test"; }

std::string to_string(TiePolicy policy) {
  return policy == TiePolicy::StableOrdinal ? "ordinal" : "average";
}

std::string to_string(RcWeighting weighting) {
  return weighting == RcWeighting::Reciprocal ? "reciprocal" : "direct";
}

namespace {
std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}
}  // namespace

Method parse_method(std::string_view text) {
  const std::string s = lower(text);
  if (s == "asc") return Method::ASC;
  if (s == "arc") return Method::ARC;
  if (s == "wcp-sc") return Method::WCP_SC;
  if (s == "wcp-rc") return Method::WCP_RC;
  if (s == "wcds-sc") return Method::WCDS_SC;
  if (s == "wcds-rc") return Method::WCDS_RC;
  throw ConfigError("unknown method '" + std::string(text) +
                    "' (expected asc|arc|wcp-sc|wcp-rc|wcds-sc|wcds-rc)");
}

Split parse_split(std::string_view text) {
  const std::string s = lower(text);
  if (s == "train") return Split::Train;
  if (s == "test") return Split::Test;
  throw ConfigError("unknown split '" + std::string(text) + "' (expected train|test)");
}

TiePolicy parse_tie_policy(std::string_view text) {
  const std::string s = lower(text);
  if (s == "ordinal") return TiePolicy::StableOrdinal;
  if (s == "average") return TiePolicy::AverageFractional;
  throw ConfigError("unknown tie policy '" + std::string(text) + "' (expected ordinal|average)");
}

RcWeighting parse_rc_weighting(std::string_view text) {
  const std::string s = lower(text);
  if (s == "reciprocal") return RcWeighting::Reciprocal;
  if (s == "direct") return RcWeighting::Direct;
  throw ConfigError("unknown rc weighting '" + std::string(text) + "' (expected reciprocal|direct)");
}

bool is_score_method(Method method) {
  return method == Method::ASC || method == Method::WCP_SC || method == Method::WCDS_SC;
}

}  // namespace cfa
