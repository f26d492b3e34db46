#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cfa {

enum class Split { Train, Test };

// The six combination rules: average, performance-weighted and
// diversity-strength-weighted, each over scores (SC) or ranks (RC).
enum class Method { ASC, ARC, WCP_SC, WCP_RC, WCDS_SC, WCDS_RC };

enum class TiePolicy { StableOrdinal, AverageFractional };

// How rank-combination weights are applied: Reciprocal uses 1/w per system,
// Direct uses w itself.
enum class RcWeighting { Reciprocal, Direct };

/// Input-format error (bad CSV, bad config file). Carries a 1-based line
/// number when the failure is line-specific, 0 otherwise.
struct ParseError : std::runtime_error {
  std::size_t line;
  explicit ParseError(const std::string& msg, std::size_t line_no = 0)
      : std::runtime_error(line_no ? msg + " (line " + std::to_string(line_no) + ")" : msg),
        line(line_no) {}
};

/// Configuration or usage error: unknown system id, invalid subset,
/// missing labels, degenerate weights, out-of-range parameters.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A dataset of n items scored by t systems. Scores are stored per system
/// (one column per system). Labels are all-or-nothing: either every item
/// carries a binary label or none does.
struct ScoreTable {
  Split split = Split::Train;
  std::vector<std::string> item_ids;
  std::optional<std::vector<int>> labels;
  std::vector<std::string> system_ids;
  std::vector<std::vector<double>> columns;
  bool normalized = false;

  std::size_t item_count() const { return item_ids.size(); }
  std::size_t system_count() const { return system_ids.size(); }

  /// Index of a system id; throws ConfigError naming the id when absent.
  std::size_t system_index(std::string_view id) const;
};

/// One fusion cell: which systems, which rule, which split the weights
/// come from, and the decision parameters.
struct FusionSpec {
  std::vector<std::string> subset;
  Method method = Method::ASC;
  Split weight_split = Split::Train;  // ignored for ASC/ARC
  double threshold = 0.5;             // SC decision threshold
  double positive_prior = 0.5;        // RC batch cut; estimated from train labels
};

struct Violation {
  std::string kind;    // "duplicate-item-id", "non-finite-score", "partial-labels", ...
  std::string detail;  // names the offending row / system
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t row = npos;
  std::size_t col = npos;
};

/// Violations are data, not exceptions: a structurally broken table yields
/// a report listing everything wrong with it.
struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_table(const ScoreTable& table);

/// Restrict a table to the named systems, in the given order. Items and
/// labels are untouched. Unknown ids raise ConfigError.
ScoreTable select_systems(const ScoreTable& table, const std::vector<std::string>& subset);

// Canonical string forms. Methods print uppercase ("WCDS-SC") as used in
// report files; parsing is case-insensitive so CLI flags take "wcds-sc".
std::string to_string(Method method);
std::string to_string(Split split);
std::string to_string(TiePolicy policy);
std::string to_string(RcWeighting weighting);
Method parse_method(std::string_view text);
Split parse_split(std::string_view text);
TiePolicy parse_tie_policy(std::string_view text);
RcWeighting parse_rc_weighting(std::string_view text);

bool is_score_method(Method method);  // true for ASC / WCP-SC / WCDS-SC

}  // namespace cfa
