#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "bellab/scenario.hpp"

namespace bellab::scenario {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double parse_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) throw ConfigError(key + ": not a number: '" + v + "'");
  return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) throw ConfigError(key + ": not a non-negative integer: '" + v + "'");
  return out;
}

void apply(ScenarioConfig& c, const std::string& key, const std::string& value) {
  if (key == "scenario") {
    c.scenario = value;
  } else if (key == "seed") {
    c.seed = parse_u64(key, value);
  } else if (key == "pairs") {
    const auto n = parse_u64(key, value);
    if (n == 0) throw ConfigError("pairs must be at least 1");
    c.n_pairs = n;
  } else if (key == "sweep_pairs") {
    const auto n = parse_u64(key, value);
    if (n == 0) throw ConfigError("sweep_pairs must be at least 1");
    c.sweep_pairs = n;
  } else if (key == "model") {
    c.model = value;
  } else if (key == "hypotheses") {
    c.hypotheses = relativity::HypothesisSet::parse(value);
  } else if (key == "grid_step") {
    c.grid_step = parse_double(key, value);
  } else if (key == "tolerance") {
    c.tolerance = parse_double(key, value);
  } else if (key == "target") {
    c.target.clear();
    std::istringstream ss(value);
    for (std::string item; std::getline(ss, item, ',');) c.target.push_back(parse_double(key, trim(item)));
  } else if (key.starts_with("angles.")) {
    const auto sym = parse_axis_symbol(key.substr(7));
    if (!sym) throw ConfigError("unknown axis in key " + key);
    c.angles.set(*sym, parse_double(key, value));
  } else if (key == "event.E.x") {
    c.event_e.x = parse_double(key, value);
  } else if (key == "event.E.t") {
    c.event_e.t = parse_double(key, value);
  } else if (key == "event.P.x") {
    c.event_p.x = parse_double(key, value);
  } else if (key == "event.P.t") {
    c.event_p.t = parse_double(key, value);
  } else if (key == "output.path") {
    c.output_path = value;
  } else if (key == "output.format") {
    const auto f = parse_format(value);
    if (!f) throw ConfigError("unknown output format: " + value);
    c.format = *f;
  } else {
    throw ConfigError("unknown config key: " + key);
  }
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) noexcept {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  if (name == "table") return OutputFormat::Table;
  return std::nullopt;
}

std::string_view extension(OutputFormat f) noexcept {
  switch (f) {
    case OutputFormat::Csv:
      return "csv";
    case OutputFormat::Json:
      return "json";
    case OutputFormat::Table:
      return "txt";
  }
  return "txt";
}

ScenarioConfig parse_config(std::istream& in) {
  ScenarioConfig c;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    const std::string body = trim(hash == std::string::npos ? line : line.substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    apply(c, trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
  }
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  return parse_config(in);
}

}  // namespace bellab::scenario
