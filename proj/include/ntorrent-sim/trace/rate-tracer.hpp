/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#ifndef NTSIM_TRACE_RATE_TRACER_HPP
#define NTSIM_TRACE_RATE_TRACER_HPP

#include "ntorrent-sim/sim/network.hpp"

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

namespace ntsim::trace {

class IoError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

enum class TraceType {
  InInterests,
  OutInterests,
  InData,
  OutData,
  InNacks,
  OutNacks,
};

std::string_view
toString(TraceType type);

struct RateSample
{
  Time time{0};
  NodeId node = INVALID_NODE;
  std::string nodeName;
  FaceId face = INVALID_FACEID;
  TraceType type = TraceType::InInterests;
  uint64_t packets = 0;
  uint64_t bytes = 0;

  double
  kilobytes() const
  {
    return static_cast<double>(bytes) / 1000.0;
  }
};

/**
 * @brief Periodic per-face packet counters on link faces.
 *
 * Every interval, one row per (node, face, type) with nonzero activity is
 * emitted and the counters restart. Rows are stamped with the end of the
 * interval they cover.
 */
class RateTracer : public sim::NetworkObserver
{
public:
  /// Attaches to @p network and schedules the first sample.
  /// @throw std::invalid_argument if @p interval is not positive
  RateTracer(sim::Network& network, Time interval);

  void
  onTransmit(const sim::Network&, NodeId node, const fw::Face& face,
             const ndn::Packet& packet, Time now) override;

  void
  onReceive(const sim::Network&, NodeId node, const fw::Face& face,
            const ndn::Packet& packet, Time now) override;

  /// Emits rows for the interval ending at @p now and resets counters.
  void
  sample(Time now);

  /// Flushes whatever is left, stamped with the next interval boundary at or after @p end.
  void
  finish(Time end);

  const std::vector<RateSample>&
  getSamples() const
  {
    return m_samples;
  }

  /// Lifetime totals keyed by (node, face, type).
  const std::map<std::tuple<NodeId, FaceId, TraceType>, std::pair<uint64_t, uint64_t>>&
  getTotals() const
  {
    return m_totals;
  }

  static void
  writeCsv(const std::vector<RateSample>& samples, std::ostream& os);

  /// @throw IoError if @p path cannot be written
  static void
  writeCsv(const std::vector<RateSample>& samples, const std::string& path);

private:
  void
  count(NodeId node, const fw::Face& face, const ndn::Packet& packet, bool incoming);

  void
  scheduleNext();

private:
  sim::Network& m_network;
  Time m_interval;
  Time m_lastSample{0};
  using Key = std::tuple<NodeId, FaceId, TraceType>;
  std::map<Key, std::pair<uint64_t, uint64_t>> m_current;
  std::map<Key, std::pair<uint64_t, uint64_t>> m_totals;
  std::vector<RateSample> m_samples;
};

} // namespace ntsim::trace

#endif // NTSIM_TRACE_RATE_TRACER_HPP
