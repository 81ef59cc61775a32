/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#ifndef NTSIM_SCENARIO_SCENARIO_HPP
#define NTSIM_SCENARIO_SCENARIO_HPP

#include "ntorrent-sim/sim/network.hpp"

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ntsim::scenario {

class ConfigError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

inline const std::vector<std::string>&
builtinScenarioNames()
{
  static const std::vector<std::string> names{
    "ntorrent-simple", "multi-consumer", "fully-connected", "forwarding-scenario",
    "router-node-degree-3", "router-node-degree-4",
  };
  return names;
}

struct ScenarioConfig
{
  std::string scenario = "ntorrent-simple";
  torrent::TorrentParams torrent;
  /// link defaults for scenarios without fixed link parameters
  uint64_t dataRateBps = 1'000'000;
  double delayMs = 10.0;
  sim::StrategyKind strategy = sim::StrategyKind::Ntorrent;
  uint32_t seed = 1;
  Time maxSimTime = milliseconds(60'000);
  Time traceInterval = milliseconds(500);
  std::string traceOut;
  std::string metricsOut;
  std::string topologyFile;
  /// per-node start time overrides, by node name
  std::map<std::string, Time> startOverrides;
  bool strictPhaseBarrier = false;
  bool dumpTables = false;
  bool verbose = false;
  bool disableCache = false;

  /// @throw ConfigError
  void
  validate() const;
};

struct LinkSpec
{
  std::string a;
  std::string b;
  uint64_t dataRateBps = 0;
  Time delay{0};
};

/// Topology, app placement and start schedule of one run.
struct ScenarioSpec
{
  std::string name;
  std::vector<sim::NodeSpec> nodes;
  std::vector<LinkSpec> links;

  const sim::NodeSpec*
  findNode(std::string_view nodeName) const;
};

/// App start times of a builtin scenario, by node name.
/// @throw ConfigError for unknown scenario names
std::map<std::string, Time>
builtinSchedule(std::string_view scenario);

/// @throw ConfigError for unknown scenario names
ScenarioSpec
makeBuiltinScenario(std::string_view scenario, uint64_t dataRateBps, Time delay);

/**
 * Reads a topology file:
 *
 *     [[node]]
 *     name = S
 *     role = seeder        # seeder | consumer | router
 *     start_ms = 0
 *
 *     [[link]]
 *     a = S
 *     b = R1
 *     rate = 1Mbps         # bits/s, or with a Kbps/Mbps/Gbps suffix
 *     delay_ms = 10
 *
 * Nodes that appear only in links are routers.
 * @throw ConfigError with a line number on malformed input
 */
ScenarioSpec
parseTopologyFile(std::istream& is, std::string_view sourceName = "<input>");

ScenarioSpec
loadTopologyFile(const std::string& path);

/// "1Mbps", "256Kbps", "1000000" → bits per second
uint64_t
parseDataRate(std::string_view text);

/// Builtin scenario or topology file, with start overrides applied.
/// @throw ConfigError
ScenarioSpec
resolveScenario(const ScenarioConfig& config);

/// Instantiates @p spec into @p network.
void
buildNetwork(const ScenarioSpec& spec, sim::Network& network);

} // namespace ntsim::scenario

#endif // NTSIM_SCENARIO_SCENARIO_HPP
