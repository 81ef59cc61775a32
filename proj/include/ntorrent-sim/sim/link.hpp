/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#ifndef NTSIM_SIM_LINK_HPP
#define NTSIM_SIM_LINK_HPP

#include "ntorrent-sim/common.hpp"

#include <array>
#include <stdexcept>

namespace ntsim::sim {

struct LinkEndpoint
{
  NodeId node = INVALID_NODE;
  FaceId face = INVALID_FACEID;
};

/**
 * Point-to-point link with a FIFO transmit queue in each direction:
 * a packet starts serializing when the previous one in the same direction
 * is done, then propagates for the configured delay.
 */
class Link
{
public:
  class ConfigError : public std::invalid_argument
  {
  public:
    using std::invalid_argument::invalid_argument;
  };

  /// @throw ConfigError on zero data rate or negative delay
  Link(LinkId id, LinkEndpoint a, LinkEndpoint b, uint64_t dataRateBps, Time delay);

  /// Queues @p bytes from @p from's side; returns the arrival time at the other end.
  Time
  transmit(NodeId from, size_t bytes, Time now);

  static Time
  serializationTime(size_t bytes, uint64_t dataRateBps);

  LinkId
  getId() const
  {
    return m_id;
  }

  const LinkEndpoint&
  getEndpoint(size_t side) const
  {
    return m_ends.at(side);
  }

  /// The endpoint opposite @p node.
  const LinkEndpoint&
  getRemote(NodeId node) const;

  uint64_t
  getDataRate() const
  {
    return m_dataRateBps;
  }

  Time
  getDelay() const
  {
    return m_delay;
  }

  Time
  getBusyUntil(NodeId from) const;

private:
  size_t
  sideOf(NodeId node) const;

private:
  LinkId m_id;
  std::array<LinkEndpoint, 2> m_ends;
  uint64_t m_dataRateBps;
  Time m_delay;
  std::array<Time, 2> m_busyUntil{Time{0}, Time{0}};
};

} // namespace ntsim::sim

#endif // NTSIM_SIM_LINK_HPP
