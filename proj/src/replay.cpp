#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "bellab/realism.hpp"

namespace bellab::realism {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

bool skippable(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

double parse_radians(const std::string& text, std::size_t line_no) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    throw ConfigError("replay line " + std::to_string(line_no) + ": bad angle '" + text + "'");
  return v;
}

}  // namespace

ReplayData parse_replay(std::istream& in) {
  ReplayData data;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    const auto tokens = split_ws(line);

    if (!have_header) {
      for (const auto& tok : tokens) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos)
          throw ConfigError("replay header: expected SYMBOL=RADIANS, got '" + tok + "'");
        const auto sym = parse_axis_symbol(tok.substr(0, eq));
        if (!sym) throw ConfigError("replay header: unknown axis '" + tok.substr(0, eq) + "'");
        if (data.axes.has(*sym)) throw ConfigError("replay header: axis declared twice");
        data.axes.set(*sym, parse_radians(tok.substr(eq + 1), line_no));
        data.order.push_back(*sym);
      }
      data.columns.resize(data.order.size());
      have_header = true;
      continue;
    }

    if (tokens.size() != data.order.size())
      throw ConfigError("replay line " + std::to_string(line_no) + ": expected " +
                        std::to_string(data.order.size()) + " values");
    for (std::size_t k = 0; k < tokens.size(); ++k) {
      const auto& t = tokens[k];
      std::int8_t v;
      if (t == "1" || t == "+1")
        v = 1;
      else if (t == "-1")
        v = -1;
      else
        throw ConfigError("replay line " + std::to_string(line_no) + ": value '" + t + "' is not ±1");
      data.columns[k].push_back(v);
    }
  }
  if (!have_header) throw ConfigError("replay file has no header line");
  if (data.order.empty()) throw ConfigError("replay header declares no axes");
  return data;
}

ReplayData load_replay(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open replay file: " + path);
  return parse_replay(in);
}

void write_replay(std::ostream& out, const AssignmentBlock& block) {
  std::vector<const OutcomeSequence*> cols;
  bool first = true;
  for (const auto& [s, seq] : block.sequences) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s=%.17g", std::string(to_string(s)).c_str(), seq.axis().angle.radians());
    out << (first ? "" : " ") << buf;
    first = false;
    cols.push_back(&seq);
  }
  out << '\n';
  for (std::size_t i = 0; i < block.block.count; ++i) {
    for (std::size_t k = 0; k < cols.size(); ++k) out << (k ? " " : "") << (cols[k]->values()[i] > 0 ? "+1" : "-1");
    out << '\n';
  }
}

}  // namespace bellab::realism
