/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#ifndef NTSIM_TRACE_METRICS_REPORT_HPP
#define NTSIM_TRACE_METRICS_REPORT_HPP

#include "ntorrent-sim/sim/network.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ntsim::trace {

struct NodeMetricsRow
{
  NodeId node = INVALID_NODE;
  std::string nodeName;
  std::string role;
  uint64_t interestsSent = 0;
  uint64_t interestsSatisfied = 0;
  /// empty when undefined (nothing sent / no samples / not finished)
  std::optional<double> isr;
  std::optional<Time> avgDelay;
  std::optional<Time> start;
  std::optional<Time> finish;
};

/// One row per node that runs an application, in node order.
std::vector<NodeMetricsRow>
summarize(const sim::Network& network);

/// `node,role,interests_sent,interests_satisfied,isr,avg_delay_ms,finish_ms`
void
writeMetricsCsv(const std::vector<NodeMetricsRow>& rows, std::ostream& os);

/// One JSON object per completed consumer:
/// node, start_ms, finish_ms, interests_sent, isr, avg_delay_ms.
void
writeCompletionJsonLines(const std::vector<NodeMetricsRow>& rows, std::ostream& os);

/// CS names, PIT names and FIB prefixes with next hops, one JSON line per node.
void
writeTableDump(const sim::Network& network, std::ostream& os);

} // namespace ntsim::trace

#endif // NTSIM_TRACE_METRICS_REPORT_HPP
