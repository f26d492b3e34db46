#pragma once

#include <map>
#include <string>
#include <string_view>

#include "cfa/core.hpp"

namespace cfa {

struct MinMax {
  double min = 0.0;
  double max = 0.0;
};

/// Per-system score ranges fitted from the training split, keyed by system id.
struct NormalizationParams {
  std::map<std::string, MinMax, std::less<>> by_system;
};

/// Parse a score CSV. Grammar: header `item_id,label,<sys1>,...,<sysT>`,
/// one row per item, label cells `0`, `1` or empty (empty in every row =>
/// unlabeled table), score cells decimal literals, LF or CRLF endings.
/// Structural problems raise ParseError with the offending line number.
ScoreTable parse_score_file(std::string_view text, Split split);

/// Inverse of parse_score_file. Scores are written with the shortest
/// round-trip representation, so write/parse is lossless and byte-stable.
std::string write_score_file(const ScoreTable& table);

ScoreTable read_score_file(const std::string& path, Split split);

/// Per-system min and max over the training scores.
NormalizationParams min_max_fit(const ScoreTable& train);

/// Map each score x to (x - min) / (max - min), clamped to [0, 1].
/// A degenerate range (min == max) maps every value to 0.5. The result is
/// flagged normalized. Params must cover every system in the table.
ScoreTable min_max_apply(const ScoreTable& table, const NormalizationParams& params);

}  // namespace cfa
