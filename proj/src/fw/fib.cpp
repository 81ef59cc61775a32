/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#include "ntorrent-sim/fw/fib.hpp"

#include <algorithm>
#include <ostream>

namespace ntsim::fw {

std::ostream&
operator<<(std::ostream& os, const NextHop& nextHop)
{
  return os << "(" << nextHop.face << ", " << nextHop.cost << ")";
}

bool
FibEntry::hasNextHop(FaceId face) const
{
  return std::any_of(nextHops.begin(), nextHops.end(),
                     [face] (const NextHop& nh) { return nh.face == face; });
}

FibEntry&
Fib::addOrUpdateNextHop(const ndn::Name& prefix, FaceId face, RouteCost cost)
{
  auto& entry = m_entries[prefix];
  entry.prefix = prefix;
  auto it = std::find_if(entry.nextHops.begin(), entry.nextHops.end(),
                         [face] (const NextHop& nh) { return nh.face == face; });
  if (it != entry.nextHops.end()) {
    it->cost = cost;
  }
  else {
    entry.nextHops.push_back({face, cost});
  }
  std::sort(entry.nextHops.begin(), entry.nextHops.end(), [] (const NextHop& a, const NextHop& b) {
    return a.cost != b.cost ? a.cost < b.cost : a.face < b.face;
  });
  return entry;
}

void
Fib::removeNextHop(const ndn::Name& prefix, FaceId face)
{
  auto it = m_entries.find(prefix);
  if (it == m_entries.end()) {
    return;
  }
  auto& hops = it->second.nextHops;
  hops.erase(std::remove_if(hops.begin(), hops.end(),
                            [face] (const NextHop& nh) { return nh.face == face; }),
             hops.end());
  if (hops.empty()) {
    m_entries.erase(it);
  }
}

const FibEntry*
Fib::findLongestPrefixMatch(const ndn::Name& name) const
{
  for (ptrdiff_t len = static_cast<ptrdiff_t>(name.size()); len >= 0; --len) {
    auto it = m_entries.find(name.getPrefix(len));
    if (it != m_entries.end()) {
      return &it->second;
    }
  }
  return nullptr;
}

const FibEntry*
Fib::findExactMatch(const ndn::Name& prefix) const
{
  auto it = m_entries.find(prefix);
  return it == m_entries.end() ? nullptr : &it->second;
}

} // namespace ntsim::fw
