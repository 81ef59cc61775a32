/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#include "ntorrent-sim/fw/client-control-strategy.hpp"

#include <algorithm>

namespace ntsim::fw {

std::vector<FaceId>
ClientControlStrategy::afterReceiveInterest(const ndn::Interest&, FaceId, const PitEntry& pitEntry,
                                            const FibEntry& fibEntry, Time)
{
  auto ranked = excludeUnusable(rankNextHops(fibEntry), pitEntry, false);
  if (ranked.size() > 1) {
    ranked.resize(1);
  }
  return ranked;
}

std::optional<FaceId>
ClientControlStrategy::choose(const FibEntry& fibEntry)
{
  if (fibEntry.nextHops.empty()) {
    return std::nullopt;
  }
  auto best = std::min_element(fibEntry.nextHops.begin(), fibEntry.nextHops.end(),
                               [] (const NextHop& a, const NextHop& b) {
                                 return a.cost != b.cost ? a.cost < b.cost : a.face < b.face;
                               });
  return best->face;
}

std::vector<FaceId>
ClientControlStrategy::rankNextHops(const FibEntry& fibEntry) const
{
  std::vector<NextHop> hops = fibEntry.nextHops;
  std::sort(hops.begin(), hops.end(), [] (const NextHop& a, const NextHop& b) {
    return a.cost != b.cost ? a.cost < b.cost : a.face < b.face;
  });
  std::vector<FaceId> ranked;
  for (const auto& nh : hops) {
    ranked.push_back(nh.face);
  }
  return ranked;
}

} // namespace ntsim::fw
