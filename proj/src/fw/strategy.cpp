/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#include "ntorrent-sim/fw/strategy.hpp"

#include <algorithm>

namespace ntsim::fw {

std::optional<FaceId>
Strategy::afterReceiveNack(const ndn::Nack&, FaceId, const PitEntry& pitEntry,
                           const FibEntry* fibEntry, Time)
{
  if (fibEntry == nullptr) {
    return std::nullopt;
  }
  auto candidates = excludeUnusable(rankNextHops(*fibEntry), pitEntry, true);
  if (candidates.empty()) {
    return std::nullopt;
  }
  return candidates.front();
}

std::vector<FaceId>
Strategy::excludeUnusable(std::vector<FaceId> ranked, const PitEntry& pitEntry, bool excludeTried)
{
  ranked.erase(std::remove_if(ranked.begin(), ranked.end(), [&] (FaceId face) {
                 return pitEntry.hasInFace(face) ||
                        (excludeTried && pitEntry.outFaces.count(face) > 0);
               }),
               ranked.end());
  return ranked;
}

} // namespace ntsim::fw
