/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#include "ntorrent-sim/trace/rate-tracer.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

namespace ntsim::trace {

std::string_view
toString(TraceType type)
{
  switch (type) {
  case TraceType::InInterests:
    return "InInterests";
  case TraceType::OutInterests:
    return "OutInterests";
  case TraceType::InData:
    return "InData";
  case TraceType::OutData:
    return "OutData";
  case TraceType::InNacks:
    return "InNacks";
  case TraceType::OutNacks:
    return "OutNacks";
  }
  return "Unknown";
}

RateTracer::RateTracer(sim::Network& network, Time interval)
  : m_network(network)
  , m_interval(interval)
{
  if (interval <= Time{0}) {
    throw std::invalid_argument("trace interval must be positive");
  }
  network.addObserver(this);
  scheduleNext();
}

void
RateTracer::scheduleNext()
{
  Time next = m_lastSample + m_interval;
  m_network.getSimulator().schedule(next, [this, next] {
    sample(next);
    if (!m_network.isWindingDown()) {
      scheduleNext();
    }
  });
}

void
RateTracer::onTransmit(const sim::Network&, NodeId node, const fw::Face& face,
                       const ndn::Packet& packet, Time)
{
  count(node, face, packet, false);
}

void
RateTracer::onReceive(const sim::Network&, NodeId node, const fw::Face& face,
                      const ndn::Packet& packet, Time)
{
  count(node, face, packet, true);
}

void
RateTracer::count(NodeId node, const fw::Face& face, const ndn::Packet& packet, bool incoming)
{
  if (face.isApplication()) {
    return;
  }
  TraceType type = std::visit([incoming] (const auto& p) {
    using T = std::decay_t<decltype(p)>;
    if constexpr (std::is_same_v<T, ndn::Interest>)
      return incoming ? TraceType::InInterests : TraceType::OutInterests;
    else if constexpr (std::is_same_v<T, ndn::Data>)
      return incoming ? TraceType::InData : TraceType::OutData;
    else
      return incoming ? TraceType::InNacks : TraceType::OutNacks;
  }, packet);

  Key key{node, face.id, type};
  size_t bytes = ndn::wireSize(packet);
  auto& cur = m_current[key];
  ++cur.first;
  cur.second += bytes;
  auto& total = m_totals[key];
  ++total.first;
  total.second += bytes;
}

void
RateTracer::sample(Time now)
{
  for (const auto& [key, counts] : m_current) {
    if (counts.first == 0) {
      continue;
    }
    const auto& [node, face, type] = key;
    m_samples.push_back({now, node, m_network.getNode(node).name, face, type, counts.first, counts.second});
  }
  m_current.clear();
  m_lastSample = now;
}

void
RateTracer::finish(Time end)
{
  if (m_current.empty()) {
    return;
  }
  Time boundary = m_lastSample;
  while (boundary < end) {
    boundary += m_interval;
  }
  if (boundary == m_lastSample) {
    boundary += m_interval;
  }
  sample(boundary);
}

void
RateTracer::writeCsv(const std::vector<RateSample>& samples, std::ostream& os)
{
  os << "time_ms,node,face,type,packets,kilobytes\n";
  for (const auto& s : samples) {
    char kb[32];
    std::snprintf(kb, sizeof(kb), "%llu.%03llu",
                  static_cast<unsigned long long>(s.bytes / 1000),
                  static_cast<unsigned long long>(s.bytes % 1000));
    os << formatMilliseconds(s.time) << ',' << s.nodeName << ',' << s.face << ','
       << toString(s.type) << ',' << s.packets << ',' << kb << '\n';
  }
}

void
RateTracer::writeCsv(const std::vector<RateSample>& samples, const std::string& path)
{
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    throw IoError("IoError: cannot open '" + path + "' for writing");
  }
  writeCsv(samples, os);
  os.flush();
  if (!os) {
    throw IoError("IoError: failed writing '" + path + "'");
  }
}

} // namespace ntsim::trace
