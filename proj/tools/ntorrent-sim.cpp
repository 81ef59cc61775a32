/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#include "ntorrent-sim/scenario/runner.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace ntsim;
using namespace ntsim::scenario;

namespace {

/// "P2=3000" → ("P2", 3000 ms)
std::pair<std::string, Time>
parseStartOverride(const std::string& text)
{
  auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == text.size()) {
    throw ConfigError("--start expects <peer>=<ms>, got '" + text + "'");
  }
  double ms = 0;
  try {
    size_t used = 0;
    ms = std::stod(text.substr(eq + 1), &used);
    if (used != text.size() - eq - 1) {
      throw std::invalid_argument("trailing");
    }
  }
  catch (const std::exception&) {
    throw ConfigError("--start: bad time in '" + text + "'");
  }
  if (ms < 0) {
    throw ConfigError("--start: negative time in '" + text + "'");
  }
  return {text.substr(0, eq), fromMilliseconds(ms)};
}

} // namespace

int
main(int argc, char** argv)
{
  CLI::App app{"nTorrent over NDN discrete-event simulator"};

  ScenarioConfig config;
  std::vector<std::string> scenarios = builtinScenarioNames();
  scenarios.push_back("from-file");

  std::string strategy = "ntorrent";
  std::string dataRate = "1Mbps";
  double traceIntervalMs = 500;
  double maxSimTimeS = 60;
  std::vector<std::string> starts;
  auto& tp = config.torrent;

  app.add_option("--scenario", config.scenario, "Scenario to run")
    ->check(CLI::IsMember(scenarios))->capture_default_str();
  app.add_option("--strategy", strategy, "Forwarding strategy")
    ->check(CLI::IsMember({"ntorrent", "client-control"}))->capture_default_str();
  app.add_option("--seed", config.seed, "Random seed")->capture_default_str();
  app.add_option("--file-count", tp.fileCount, "Files in the torrent")
    ->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--file-size", tp.fileSize, "Bytes per file")
    ->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--packet-size", tp.packetSize, "Content bytes per data packet")
    ->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--names-per-manifest", tp.namesPerManifest, "Packet names per manifest")
    ->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--names-per-segment", tp.namesPerSegment, "Manifest names per torrent-file segment")
    ->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--data-rate", dataRate, "Default link rate, e.g. 1Mbps, 256Kbps")->capture_default_str();
  app.add_option("--delay-ms", config.delayMs, "Default link delay (ms)")
    ->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--trace-out", config.traceOut, "Rate trace CSV path");
  app.add_option("--metrics-out", config.metricsOut, "Per-node metrics CSV path");
  app.add_option("--trace-interval-ms", traceIntervalMs, "Rate tracer interval (ms)")
    ->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--max-sim-time", maxSimTimeS, "Simulated time limit (s)")
    ->check(CLI::PositiveNumber)->capture_default_str();
  app.add_flag("--strict-phase-barrier", config.strictPhaseBarrier,
               "Fetch every torrent-file segment before any manifest");
  app.add_flag("--dump-tables", config.dumpTables, "Print CS/PIT/FIB of every node at the end");
  app.add_flag("--no-cache", config.disableCache, "Disable the content stores");
  app.add_option("--topology-file", config.topologyFile, "Topology file for --scenario from-file");
  app.add_option("--start", starts, "App start override <peer>=<ms> (repeatable)");
  app.add_flag("--verbose", config.verbose, "Log every packet");

  try {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : EXIT_CONFIG_ERROR;
  }

  try {
    if (!config.topologyFile.empty() && config.scenario == "ntorrent-simple" &&
        app.count("--scenario") == 0) {
      config.scenario = "from-file";
    }
    config.strategy = strategy == "client-control" ? sim::StrategyKind::ClientControl
                                                   : sim::StrategyKind::Ntorrent;
    config.dataRateBps = parseDataRate(dataRate);
    config.traceInterval = fromMilliseconds(traceIntervalMs);
    config.maxSimTime = fromMilliseconds(maxSimTimeS * 1000.0);
    for (const auto& s : starts) {
      auto [node, at] = parseStartOverride(s);
      config.startOverrides[node] = at;
    }
  }
  catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_CONFIG_ERROR;
  }

  return runScenario(config, std::cout, std::cerr);
}
