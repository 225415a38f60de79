#pragma once

// Registered scenarios and their result records. A scenario is a pure
// function of its configuration: the same config and seed give the same
// result, and the emitters below render it deterministically.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bellab/core.hpp"
#include "bellab/relativity.hpp"

namespace bellab::scenario {

enum class OutputFormat : std::uint8_t { Csv, Json, Table };

std::optional<OutputFormat> parse_format(std::string_view name) noexcept;
std::string_view extension(OutputFormat f) noexcept;

inline constexpr int kSchemaVersion = 1;

struct ScenarioConfig {
  std::string scenario;
  std::uint64_t seed = 1;
  std::optional<std::size_t> n_pairs;  // scenario default when unset
  std::size_t sweep_pairs = 2048;      // lhv-sweep: pairs per grid configuration
  AxisConfig angles;                   // overrides of the scenario's default angles
  std::string model;                   // empty: scenario default
  std::optional<relativity::HypothesisSet> hypotheses;
  std::optional<double> grid_step;
  std::optional<double> tolerance;     // Monte Carlo tolerance, default 4/sqrt(N)
  std::vector<double> target;          // polytope scenario: 3 or 4 correlations
  relativity::SpacetimeEvent event_e{-1.0, 0.0};
  relativity::SpacetimeEvent event_p{1.0, 0.0};
  std::optional<std::string> output_path;
  OutputFormat format = OutputFormat::Table;
};

/// Flat `key = value` text, `#` comments. Keys: scenario, seed, pairs, sweep_pairs, model,
/// hypotheses, grid_step, tolerance, target, angles.<E|E'|P|P'>,
/// event.<E|P>.<x|t>, output.path, output.format. Throws ConfigError.
ScenarioConfig parse_config(std::istream& in);
ScenarioConfig load_config(const std::string& path);

const std::vector<std::string_view>& registered_scenarios();

/// One output row; CSV columns are scenario,symbol,status,value,lo,hi,n,seed.
struct ResultRow {
  std::string symbol;
  std::string status;
  double value = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  std::uint64_t n = 0;
};

struct ScenarioResult {
  std::string scenario;
  std::string anchor;  // tag naming the result the scenario reproduces
  ScenarioConfig inputs;
  std::size_t n_pairs = 0;
  relativity::HypothesisSet hypotheses;
  std::string model;
  std::vector<ResultRow> rows;
  std::string verdict;
  double wall_clock_seconds = 0.0;  // not written to result files
};

/// Throws ConfigError for unknown scenarios or invalid settings and
/// UndefinedCorrelationError when a required correlation does not exist
/// under the configured hypotheses.
ScenarioResult run(const ScenarioConfig& config);

std::string to_csv(const ScenarioResult& r);
std::string to_json(const ScenarioResult& r);
std::string to_table(const ScenarioResult& r);
std::string render(const ScenarioResult& r, OutputFormat f);

}  // namespace bellab::scenario
