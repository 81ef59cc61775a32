/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#ifndef NTSIM_FW_FIB_HPP
#define NTSIM_FW_FIB_HPP

#include "ntorrent-sim/ndn/name.hpp"
#include "ntorrent-sim/common.hpp"

#include <iosfwd>
#include <map>
#include <vector>

namespace ntsim::fw {

/// Route cost in nanoseconds of path delay.
using RouteCost = uint64_t;

struct NextHop
{
  FaceId face = INVALID_FACEID;
  RouteCost cost = 0;

  bool operator==(const NextHop&) const = default;
};

/// Next hops are kept ordered by ascending cost, ties by face id.
std::ostream&
operator<<(std::ostream& os, const NextHop& nextHop);

struct FibEntry
{
  ndn::Name prefix;
  std::vector<NextHop> nextHops;

  bool
  hasNextHop(FaceId face) const;
};

class Fib
{
public:
  /// Adds a next hop, or updates its cost if the face is already present.
  FibEntry&
  addOrUpdateNextHop(const ndn::Name& prefix, FaceId face, RouteCost cost);

  void
  removeNextHop(const ndn::Name& prefix, FaceId face);

  const FibEntry*
  findLongestPrefixMatch(const ndn::Name& name) const;

  const FibEntry*
  findExactMatch(const ndn::Name& prefix) const;

  void
  clear()
  {
    m_entries.clear();
  }

  size_t
  size() const
  {
    return m_entries.size();
  }

  const std::map<ndn::Name, FibEntry>&
  entries() const
  {
    return m_entries;
  }

private:
  std::map<ndn::Name, FibEntry> m_entries;
};

} // namespace ntsim::fw

#endif // NTSIM_FW_FIB_HPP
