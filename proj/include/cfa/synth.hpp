#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cfa/core.hpp"

namespace cfa {

/// Configuration for the synthetic scoring-system generator. Identical
/// configs produce byte-identical score files: the generator runs a fixed
/// mt19937_64 stream through explicit bit-level uniform mappings, never
/// through platform distribution objects.
struct SynthConfig {
  std::size_t n_items = 1000;  // per split
  std::size_t t_systems = 4;
  std::uint64_t seed = 42;
  std::vector<double> accuracy;   // per system, in (0, 1]
  std::vector<double> sharpness;  // per system, > 0; larger = more extreme scores
  double positive_fraction = 0.5;
};

/// Fill accuracy/sharpness up to t_systems from the default cycles and
/// check bounds. Throws ConfigError on invalid values.
SynthConfig resolve_config(SynthConfig config);

/// Labeled train and test tables with system ids A, B, C, ... Each score is
/// a probability-style value in (0, 1); with probability accuracy[j] it
/// lands on the label's side of 0.5, at a margin drawn as 0.5 * u^(1/s).
std::pair<ScoreTable, ScoreTable> generate(const SynthConfig& config);

/// Three systems erring on disjoint thirds of the items. Erring scores sit
/// 0.1 past 0.5 on the wrong side, correct scores 0.4 past it, so each
/// system is right on exactly 2/3 of items while the equal-weight mean is
/// right on all of them. n must be a positive multiple of 3.
ScoreTable generate_disjoint_error_fixture(std::size_t n);

/// Flat key=value config files (seed, items, systems, accuracy, sharpness,
/// positive_fraction). Unknown keys are rejected.
SynthConfig parse_synth_config(std::string_view text);
std::string format_synth_config(const SynthConfig& config);

std::string default_system_id(std::size_t index);

}  // namespace cfa
