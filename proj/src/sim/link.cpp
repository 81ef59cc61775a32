/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#include "ntorrent-sim/sim/link.hpp"

#include <algorithm>

namespace ntsim::sim {

Link::Link(LinkId id, LinkEndpoint a, LinkEndpoint b, uint64_t dataRateBps, Time delay)
  : m_id(id)
  , m_ends{a, b}
  , m_dataRateBps(dataRateBps)
  , m_delay(delay)
{
  if (dataRateBps == 0) {
    throw ConfigError("link data rate must be positive");
  }
  if (delay < Time{0}) {
    throw ConfigError("link delay must not be negative");
  }
}

Time
Link::serializationTime(size_t bytes, uint64_t dataRateBps)
{
  // bits * 1e9 / rate, truncated to whole nanoseconds
  unsigned __int128 ns = static_cast<unsigned __int128>(bytes) * 8u * 1000000000u / dataRateBps;
  return Time(static_cast<int64_t>(ns));
}

Time
Link::transmit(NodeId from, size_t bytes, Time now)
{
  size_t side = sideOf(from);
  Time start = std::max(now, m_busyUntil[side]);
  Time done = start + serializationTime(bytes, m_dataRateBps);
  m_busyUntil[side] = done;
  return done + m_delay;
}

const LinkEndpoint&
Link::getRemote(NodeId node) const
{
  return m_ends[1 - sideOf(node)];
}

Time
Link::getBusyUntil(NodeId from) const
{
  return m_busyUntil[sideOf(from)];
}

size_t
Link::sideOf(NodeId node) const
{
  if (m_ends[0].node == node) {
    return 0;
  }
  if (m_ends[1].node == node) {
    return 1;
  }
  throw std::invalid_argument("node " + std::to_string(node) + " is not attached to link " +
                              std::to_string(m_id));
}

} // namespace ntsim::sim
