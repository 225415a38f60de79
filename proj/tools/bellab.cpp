// Command-line scenario runner. One scenario per invocation.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bellab/errors.hpp"
#include "bellab/scenario.hpp"

namespace {

enum ExitCode : int { kOk = 0, kCrash = 1, kConfig = 2, kUndefined = 3, kIo = 4 };

void write_output(const std::string& text, const std::optional<std::string>& path) {
  if (!path) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(*path, std::ios::binary | std::ios::trunc);
  if (!out) throw bellab::IoError("cannot open output file: " + *path);
  out << text;
  out.close();
  if (!out) throw bellab::IoError("failed writing output file: " + *path);
}

}  // namespace

int main(int argc, char** argv) {
  namespace sc = bellab::scenario;

  CLI::App app{"Desk-scale Bell-test laboratory: runs one registered scenario."};
  std::optional<std::string> scenario, config_path, out_path, format;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> pairs;
  std::optional<double> grid_step;
  bool list = false;

  std::string names;
  for (auto n : sc::registered_scenarios()) names += (names.empty() ? "" : ", ") + std::string(n);
  app.add_option("--scenario", scenario, "Scenario to run: " + names);
  app.add_option("--config", config_path, "Flat key = value configuration file");
  app.add_option("--seed", seed, "64-bit seed");
  app.add_option("--pairs", pairs, "Number of pairs N");
  app.add_option("--out", out_path, "Output file (default: $BELLAB_OUT_DIR/<scenario>.<ext>, else stdout)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json", "table"}));
  app.add_option("--grid-step", grid_step, "Angle grid step in radians");
  app.add_flag("--list", list, "List registered scenarios and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfig;
  }

  if (list) {
    for (auto n : sc::registered_scenarios()) std::cout << n << '\n';
    return kOk;
  }

  try {
    sc::ScenarioConfig cfg = config_path ? sc::load_config(*config_path) : sc::ScenarioConfig{};
    if (scenario) cfg.scenario = *scenario;
    if (seed) cfg.seed = *seed;
    if (pairs) {
      if (*pairs == 0) throw bellab::ConfigError("--pairs must be at least 1");
      cfg.n_pairs = *pairs;
    }
    if (grid_step) cfg.grid_step = *grid_step;
    if (format) cfg.format = *sc::parse_format(*format);
    if (out_path) cfg.output_path = *out_path;
    if (cfg.scenario.empty()) throw bellab::ConfigError("no scenario given (use --scenario or a config file)");

    std::optional<std::string> destination = cfg.output_path;
    if (!destination) {
      if (const char* dir = std::getenv("BELLAB_OUT_DIR"); dir && *dir)
        destination = (std::filesystem::path(dir) / (cfg.scenario + "." + std::string(sc::extension(cfg.format))))
                          .string();
    }

    const auto result = sc::run(cfg);
    write_output(sc::render(result, cfg.format), destination);
    std::fprintf(stderr, "%s: %s (%.3f s)\n", result.scenario.c_str(), result.verdict.c_str(),
                 result.wall_clock_seconds);
    return kOk;
  } catch (const bellab::UndefinedCorrelationError& e) {
    std::fprintf(stderr, "undefined correlation: %s\n", e.what());
    return kUndefined;
  } catch (const bellab::IoError& e) {
    std::fprintf(stderr, "i/o error: %s\n", e.what());
    return kIo;
  } catch (const bellab::ConfigError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return kConfig;
  } catch (const bellab::DomainError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return kConfig;
  } catch (const bellab::ModelError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return kConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kCrash;
  }
}
