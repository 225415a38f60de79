#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "bellab/scenario.hpp"
#include "json.hpp"

namespace bellab::scenario {

namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string short_num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

nlohmann::ordered_json json_number(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

nlohmann::ordered_json json_angles(const AxisConfig& a) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (auto s : a.symbols()) out[std::string(to_string(s))] = a.at(s).radians();
  return out;
}

}  // namespace

std::string to_csv(const ScenarioResult& r) {
  std::ostringstream out;
  out << "scenario,symbol,status,value,lo,hi,n,seed\n";
  const std::string seed = std::to_string(r.inputs.seed);
  for (const auto& row : r.rows)
    out << csv_field(r.scenario) << ',' << csv_field(row.symbol) << ',' << csv_field(row.status) << ','
        << num(row.value) << ',' << num(row.lo) << ',' << num(row.hi) << ',' << row.n << ',' << seed << '\n';
  out << csv_field(r.scenario) << ",verdict," << csv_field(r.verdict) << ",nan,nan,nan,0," << seed << '\n';
  return out.str();
}

std::string to_json(const ScenarioResult& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["scenario"] = r.scenario;
  j["anchor"] = r.anchor;
  auto& in = j["inputs"];
  in["seed"] = r.inputs.seed;
  in["n_pairs"] = r.n_pairs;
  in["model"] = r.model;
  in["hypotheses"] = r.hypotheses.to_string();
  in["angle_overrides"] = json_angles(r.inputs.angles);
  if (r.inputs.grid_step) in["grid_step"] = *r.inputs.grid_step;
  if (r.inputs.tolerance) in["tolerance"] = *r.inputs.tolerance;
  if (!r.inputs.target.empty()) in["target"] = r.inputs.target;
  if (r.scenario == "lhv-sweep") in["sweep_pairs"] = r.inputs.sweep_pairs;
  if (r.scenario == "observer-order")
    in["events"] = {{"E", {{"x", r.inputs.event_e.x}, {"t", r.inputs.event_e.t}}},
                    {"P", {{"x", r.inputs.event_p.x}, {"t", r.inputs.event_p.t}}}};
  auto& rows = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"symbol", row.symbol},
                    {"status", row.status},
                    {"value", json_number(row.value)},
                    {"lo", json_number(row.lo)},
                    {"hi", json_number(row.hi)},
                    {"n", row.n}});
  j["verdict"] = r.verdict;
  return j.dump(2) + "\n";
}

std::string to_table(const ScenarioResult& r) {
  std::vector<std::array<std::string, 6>> cells;
  cells.push_back({"symbol", "status", "value", "lo", "hi", "n"});
  for (const auto& row : r.rows)
    cells.push_back({row.symbol, row.status, short_num(row.value), short_num(row.lo), short_num(row.hi),
                     std::to_string(row.n)});
  std::array<std::size_t, 6> width{};
  for (const auto& c : cells)
    for (std::size_t k = 0; k < c.size(); ++k) width[k] = std::max(width[k], c[k].size());

  std::ostringstream out;
  out << "scenario:   " << r.scenario << '\n'
      << "seed:       " << r.inputs.seed << '\n'
      << "pairs:      " << r.n_pairs << '\n'
      << "model:      " << r.model << '\n'
      << "hypotheses: " << r.hypotheses.to_string() << "\n\n";
  for (const auto& c : cells) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      out << c[k];
      if (k + 1 < c.size()) out << std::string(width[k] - c[k].size() + 2, ' ');
    }
    out << '\n';
  }
  out << "\nverdict: " << r.verdict << '\n';
  return out.str();
}

std::string render(const ScenarioResult& r, OutputFormat f) {
  switch (f) {
    case OutputFormat::Csv:
      return to_csv(r);
    case OutputFormat::Json:
      return to_json(r);
    case OutputFormat::Table:
      return to_table(r);
  }
  return to_table(r);
}

}  // namespace bellab::scenario
