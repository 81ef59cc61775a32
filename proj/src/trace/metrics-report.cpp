/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#include "ntorrent-sim/trace/metrics-report.hpp"

#include <json.hpp>

#include <cstdio>
#include <ostream>

namespace ntsim::trace {

namespace {

std::string
formatRatio(double value)
{
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", value);
  return buf;
}

} // namespace

std::vector<NodeMetricsRow>
summarize(const sim::Network& network)
{
  std::vector<NodeMetricsRow> rows;
  for (NodeId id = 0; id < network.getNodeCount(); ++id) {
    const auto& node = network.getNode(id);
    if (!node.app) {
      continue;
    }
    NodeMetricsRow row;
    row.node = id;
    row.nodeName = node.name;
    row.role = std::string(sim::toString(node.role));
    const auto& metrics = node.app->getMetrics();
    row.interestsSent = metrics.interestsSent;
    row.interestsSatisfied = metrics.interestsSatisfied;
    row.isr = metrics.interestSatisfactionRate();
    row.avgDelay = metrics.averageDelay();
    if (const auto* consumer = network.getConsumer(id)) {
      row.start = consumer->getStartTime();
      row.finish = consumer->getFinishTime();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void
writeMetricsCsv(const std::vector<NodeMetricsRow>& rows, std::ostream& os)
{
  os << "node,role,interests_sent,interests_satisfied,isr,avg_delay_ms,finish_ms\n";
  for (const auto& row : rows) {
    os << row.nodeName << ',' << row.role << ',' << row.interestsSent << ','
       << row.interestsSatisfied << ',' << (row.isr ? formatRatio(*row.isr) : "") << ','
       << (row.avgDelay ? formatMilliseconds(*row.avgDelay) : "") << ','
       << (row.finish ? formatMilliseconds(*row.finish) : "") << '\n';
  }
}

void
writeCompletionJsonLines(const std::vector<NodeMetricsRow>& rows, std::ostream& os)
{
  for (const auto& row : rows) {
    if (!row.finish) {
      continue;
    }
    nlohmann::ordered_json j;
    j["node"] = row.nodeName;
    j["start_ms"] = formatMilliseconds(row.start.value_or(Time{0}));
    j["finish_ms"] = formatMilliseconds(*row.finish);
    j["interests_sent"] = row.interestsSent;
    j["isr"] = row.isr ? nlohmann::ordered_json(*row.isr) : nlohmann::ordered_json(nullptr);
    j["avg_delay_ms"] = row.avgDelay ? nlohmann::ordered_json(formatMilliseconds(*row.avgDelay))
                                     : nlohmann::ordered_json(nullptr);
    os << j.dump() << '\n';
  }
}

void
writeTableDump(const sim::Network& network, std::ostream& os)
{
  for (NodeId id = 0; id < network.getNodeCount(); ++id) {
    const auto& node = network.getNode(id);
    const auto& fwd = *node.forwarder;
    nlohmann::ordered_json j;
    j["node"] = node.name;
    j["time_ms"] = formatMilliseconds(network.now());

    auto cs = nlohmann::ordered_json::array();
    for (const auto& name : fwd.getCs().names()) {
      cs.push_back(name.toUri());
    }
    j["cs"] = std::move(cs);

    auto pit = nlohmann::ordered_json::array();
    for (const auto& [name, entry] : fwd.getPit().entries()) {
      pit.push_back(name.toUri());
    }
    j["pit"] = std::move(pit);

    auto fib = nlohmann::ordered_json::array();
    for (const auto& [prefix, entry] : fwd.getFib().entries()) {
      nlohmann::ordered_json e;
      e["prefix"] = prefix.toUri();
      auto hops = nlohmann::ordered_json::array();
      for (const auto& nh : entry.nextHops) {
        hops.push_back({{"face", nh.face}, {"cost_ms", formatMilliseconds(Time(nh.cost))}});
      }
      e["nexthops"] = std::move(hops);
      fib.push_back(std::move(e));
    }
    j["fib"] = std::move(fib);
    os << j.dump() << '\n';
  }
}

} // namespace ntsim::trace
