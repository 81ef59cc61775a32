/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#include "ntorrent-sim/scenario/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>

namespace ntsim::scenario {

namespace {

constexpr uint64_t MBPS = 1'000'000;
constexpr uint64_t KBPS = 1'000;

using sim::NodeRole;
using sim::NodeSpec;

std::string
trim(std::string_view s)
{
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) {
    return {};
  }
  size_t e = s.find_last_not_of(" \t\r");
  std::string out(s.substr(b, e - b + 1));
  if (out.size() >= 2 && (out.front() == '"' || out.front() == '\'') && out.back() == out.front()) {
    out = out.substr(1, out.size() - 2);
  }
  return out;
}

double
parseNumber(std::string_view text, std::string_view what)
{
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw ConfigError("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

void
addLinks(ScenarioSpec& spec, std::initializer_list<std::tuple<const char*, const char*, double>> links,
         uint64_t rate)
{
  for (const auto& [a, b, delayMs] : links) {
    spec.links.push_back({a, b, rate, fromMilliseconds(delayMs)});
  }
}

} // namespace

void
ScenarioConfig::validate() const
{
  bool builtin = std::find(builtinScenarioNames().begin(), builtinScenarioNames().end(), scenario) !=
                 builtinScenarioNames().end();
  if (!builtin && scenario != "from-file") {
    throw ConfigError("unknown scenario '" + scenario + "'");
  }
  if (scenario == "from-file" && topologyFile.empty()) {
    throw ConfigError("scenario 'from-file' needs --topology-file");
  }
  try {
    torrent.validate();
  }
  catch (const torrent::InvalidParams& e) {
    throw ConfigError(e.what());
  }
  if (dataRateBps == 0) {
    throw ConfigError("data rate must be positive");
  }
  if (!(delayMs > 0) || !std::isfinite(delayMs)) {
    throw ConfigError("link delay must be positive");
  }
  if (maxSimTime <= Time{0}) {
    throw ConfigError("max simulation time must be positive");
  }
  if (traceInterval <= Time{0}) {
    throw ConfigError("trace interval must be positive");
  }
  for (const auto& [name, start] : startOverrides) {
    if (start < Time{0}) {
      throw ConfigError("start time for " + name + " must not be negative");
    }
  }
}

const NodeSpec*
ScenarioSpec::findNode(std::string_view nodeName) const
{
  auto it = std::find_if(nodes.begin(), nodes.end(), [&] (const NodeSpec& n) { return n.name == nodeName; });
  return it == nodes.end() ? nullptr : &*it;
}

std::map<std::string, Time>
builtinSchedule(std::string_view scenario)
{
  auto spec = makeBuiltinScenario(scenario, MBPS, milliseconds(10));
  std::map<std::string, Time> schedule;
  for (const auto& node : spec.nodes) {
    if (node.role != NodeRole::Router) {
      schedule[node.name] = node.start;
    }
  }
  return schedule;
}

ScenarioSpec
makeBuiltinScenario(std::string_view scenario, uint64_t dataRateBps, Time delay)
{
  const Time T0{0};
  const Time T1 = milliseconds(1000);
  const double d = toMilliseconds(delay);
  ScenarioSpec spec;
  spec.name = std::string(scenario);

  if (scenario == "ntorrent-simple") {
    spec.nodes = {{"S", NodeRole::Seeder, T0}, {"C1", NodeRole::Consumer, T1}};
    addLinks(spec, {{"S", "C1", d}}, dataRateBps);
  }
  else if (scenario == "multi-consumer") {
    // C3 hangs off C1, so whatever C1 holds is one hop away from it
    spec.nodes = {{"S", NodeRole::Seeder, T0}, {"R1", NodeRole::Router, T0},
                  {"C1", NodeRole::Consumer, T1}, {"C2", NodeRole::Consumer, T1},
                  {"C3", NodeRole::Consumer, T1}};
    addLinks(spec, {{"S", "R1", d}, {"R1", "C1", d}, {"R1", "C2", d}, {"C1", "C3", d}}, dataRateBps);
  }
  else if (scenario == "fully-connected") {
    spec.nodes = {{"S", NodeRole::Seeder, T0}, {"C1", NodeRole::Consumer, T1},
                  {"C2", NodeRole::Consumer, T1}, {"C3", NodeRole::Consumer, T1}};
    addLinks(spec, {{"S", "C1", d}, {"S", "C2", d}, {"S", "C3", d},
                    {"C1", "C2", d}, {"C1", "C3", d}, {"C2", "C3", d}}, dataRateBps);
  }
  else if (scenario == "forwarding-scenario") {
    // two router paths of different delay between the seeder and C1
    spec.nodes = {{"S", NodeRole::Seeder, T0},
                  {"R1", NodeRole::Router, T0}, {"R2", NodeRole::Router, T0},
                  {"R3", NodeRole::Router, T0}, {"R4", NodeRole::Router, T0},
                  {"C1", NodeRole::Consumer, T1}, {"C2", NodeRole::Consumer, T1}};
    addLinks(spec, {{"R1", "R2", 10}, {"R1", "R3", 20}, {"R2", "R4", 10}, {"R3", "R4", 10},
                    {"S", "R1", d}, {"C1", "R4", d}, {"C2", "R3", d}}, dataRateBps);
  }
  else if (scenario == "router-node-degree-4") {
    spec.nodes = {{"R1", NodeRole::Router, T0}, {"R2", NodeRole::Router, T0},
                  {"R3", NodeRole::Router, T0}, {"R4", NodeRole::Router, T0},
                  {"P1", NodeRole::Consumer, milliseconds(1000)},
                  {"P2", NodeRole::Consumer, milliseconds(11000)},
                  {"P3", NodeRole::Consumer, milliseconds(6000)},
                  {"P4", NodeRole::Seeder, T0}};
    addLinks(spec, {{"R1", "R2", 10}, {"R1", "R3", 20}, {"R1", "R4", 30},
                    {"R2", "R3", 15}, {"R2", "R4", 25}, {"R3", "R4", 10},
                    {"P1", "R1", 5}, {"P2", "R2", 5}, {"P3", "R3", 5}, {"P4", "R4", 5}}, MBPS);
  }
  else if (scenario == "router-node-degree-3") {
    spec.nodes = {{"R1", NodeRole::Router, T0}, {"R2", NodeRole::Router, T0},
                  {"R3", NodeRole::Router, T0},
                  {"P1", NodeRole::Seeder, T0},
                  {"P2", NodeRole::Consumer, T1}, {"P3", NodeRole::Consumer, T1},
                  {"P4", NodeRole::Consumer, T1}, {"P5", NodeRole::Consumer, T1}};
    addLinks(spec, {{"R1", "R2", 10}, {"R2", "R3", 10}}, 256 * KBPS);
    addLinks(spec, {{"P1", "R1", 10}, {"P2", "R1", 10}, {"P3", "R2", 10},
                    {"P4", "R3", 10}, {"P5", "R3", 10}}, MBPS);
  }
  else {
    throw ConfigError("unknown scenario '" + std::string(scenario) + "'");
  }
  return spec;
}

uint64_t
parseDataRate(std::string_view text)
{
  std::string t = trim(text);
  uint64_t multiplier = 1;
  auto endsWith = [&t] (std::string_view suffix) {
    if (t.size() < suffix.size()) {
      return false;
    }
    return std::equal(suffix.rbegin(), suffix.rend(), t.rbegin(), [] (char a, char b) {
      return std::tolower(static_cast<unsigned char>(a)) == std::tolower(static_cast<unsigned char>(b));
    });
  };
  for (auto [suffix, mult] : {std::pair<std::string_view, uint64_t>{"gbps", 1'000'000'000},
                              {"mbps", MBPS}, {"kbps", KBPS}, {"bps", 1}}) {
    if (endsWith(suffix)) {
      t.resize(t.size() - suffix.size());
      multiplier = mult;
      break;
    }
  }
  double value = parseNumber(trim(t), "data rate");
  double bps = value * static_cast<double>(multiplier);
  if (!(bps >= 1) || bps > 1e15) {
    throw ConfigError("data rate must be positive: '" + std::string(text) + "'");
  }
  return static_cast<uint64_t>(std::llround(bps));
}

ScenarioSpec
parseTopologyFile(std::istream& is, std::string_view sourceName)
{
  ScenarioSpec spec;
  spec.name = "from-file";

  enum class Section { None, Node, Link } section = Section::None;
  std::map<std::string, std::string> fields;
  size_t sectionLine = 0;
  std::string src(sourceName);

  auto error = [&src] (size_t line, const std::string& what) {
    return ConfigError(src + ":" + std::to_string(line) + ": " + what);
  };

  auto require = [&] (const char* key) -> const std::string& {
    auto it = fields.find(key);
    if (it == fields.end()) {
      throw error(sectionLine, std::string("missing '") + key + "'");
    }
    return it->second;
  };

  auto flush = [&] {
    try {
      if (section == Section::Node) {
        NodeSpec node;
        node.name = require("name");
        for (const auto& [key, value] : fields) {
          if (key != "name" && key != "role" && key != "start_ms") {
            throw error(sectionLine, "unknown node key '" + key + "'");
          }
        }
        std::string role = fields.count("role") ? fields["role"] : "router";
        if (role == "seeder" || role == "producer") {
          node.role = NodeRole::Seeder;
        }
        else if (role == "consumer" || role == "peer") {
          node.role = NodeRole::Consumer;
          node.start = milliseconds(1000);
        }
        else if (role == "router") {
          node.role = NodeRole::Router;
        }
        else {
          throw error(sectionLine, "unknown role '" + role + "'");
        }
        if (fields.count("start_ms")) {
          double ms = parseNumber(fields["start_ms"], "start_ms");
          if (ms < 0) {
            throw error(sectionLine, "start_ms must not be negative");
          }
          node.start = fromMilliseconds(ms);
        }
        if (spec.findNode(node.name) != nullptr) {
          throw error(sectionLine, "duplicate node '" + node.name + "'");
        }
        spec.nodes.push_back(std::move(node));
      }
      else if (section == Section::Link) {
        for (const auto& [key, value] : fields) {
          if (key != "a" && key != "b" && key != "rate" && key != "delay_ms") {
            throw error(sectionLine, "unknown link key '" + key + "'");
          }
        }
        LinkSpec link;
        link.a = require("a");
        link.b = require("b");
        link.dataRateBps = parseDataRate(require("rate"));
        double ms = parseNumber(require("delay_ms"), "delay_ms");
        if (ms < 0) {
          throw error(sectionLine, "delay_ms must not be negative");
        }
        link.delay = fromMilliseconds(ms);
        spec.links.push_back(std::move(link));
      }
    }
    catch (const ConfigError& e) {
      std::string what = e.what();
      if (what.rfind(src + ":", 0) == 0) {
        throw;
      }
      throw error(sectionLine, what);
    }
    fields.clear();
  };

  std::string line;
  size_t lineNo = 0;
  while (std::getline(is, line)) {
    ++lineNo;
    auto hash = line.find('#');
    std::string text = trim(std::string_view(line).substr(0, hash));
    if (text.empty()) {
      continue;
    }
    if (text.front() == '[') {
      flush();
      if (text == "[[node]]") {
        section = Section::Node;
      }
      else if (text == "[[link]]") {
        section = Section::Link;
      }
      else {
        throw error(lineNo, "unknown section " + text);
      }
      sectionLine = lineNo;
      continue;
    }
    auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw error(lineNo, "expected key = value");
    }
    if (section == Section::None) {
      throw error(lineNo, "key outside of a [[node]] or [[link]] section");
    }
    std::string key = trim(text.substr(0, eq));
    std::string value = trim(text.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw error(lineNo, "expected key = value");
    }
    if (!fields.emplace(key, value).second) {
      throw error(lineNo, "duplicate key '" + key + "'");
    }
  }
  flush();

  for (const auto& link : spec.links) {
    for (const auto& end : {link.a, link.b}) {
      if (spec.findNode(end) == nullptr) {
        spec.nodes.push_back({end, NodeRole::Router, Time{0}});
      }
    }
  }
  if (spec.nodes.empty()) {
    throw ConfigError(src + ": no nodes defined");
  }
  return spec;
}

ScenarioSpec
loadTopologyFile(const std::string& path)
{
  std::ifstream is(path);
  if (!is) {
    throw ConfigError("cannot open topology file '" + path + "'");
  }
  return parseTopologyFile(is, path);
}

ScenarioSpec
resolveScenario(const ScenarioConfig& config)
{
  config.validate();
  ScenarioSpec spec = config.scenario == "from-file"
                        ? loadTopologyFile(config.topologyFile)
                        : makeBuiltinScenario(config.scenario, config.dataRateBps,
                                              fromMilliseconds(config.delayMs));
  for (const auto& [name, start] : config.startOverrides) {
    auto it = std::find_if(spec.nodes.begin(), spec.nodes.end(),
                           [&] (const NodeSpec& n) { return n.name == name; });
    if (it == spec.nodes.end()) {
      throw ConfigError("--start names unknown node '" + name + "'");
    }
    it->start = start;
  }
  return spec;
}

void
buildNetwork(const ScenarioSpec& spec, sim::Network& network)
{
  std::set<std::string> names;
  for (const auto& node : spec.nodes) {
    if (!names.insert(node.name).second) {
      throw ConfigError("duplicate node '" + node.name + "'");
    }
    network.createAndInstall(node);
  }
  for (const auto& link : spec.links) {
    NodeId a = network.findNode(link.a);
    NodeId b = network.findNode(link.b);
    try {
      network.createLink(a, b, link.dataRateBps, link.delay);
    }
    catch (const routing::DuplicateLink& e) {
      throw ConfigError(e.what());
    }
    catch (const sim::Link::ConfigError& e) {
      throw ConfigError(e.what());
    }
  }
}

} // namespace ntsim::scenario
