/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#include "ntorrent-sim/fw/ntorrent-strategy.hpp"

#include <algorithm>

namespace ntsim::fw {

std::vector<FaceId>
NtorrentStrategy::afterReceiveInterest(const ndn::Interest&, FaceId inFace, const PitEntry& pitEntry,
                                       const FibEntry& fibEntry, Time now)
{
  m_pendingArrivals[pitEntry.name] = Arrival{inFace, now};
  return excludeUnusable(rankNextHops(fibEntry), pitEntry, false);
}

void
NtorrentStrategy::beforeSatisfyInterest(const PitEntry& pitEntry, FaceId inFace,
                                        const ndn::Data&, Time now)
{
  auto it = m_pendingArrivals.find(pitEntry.name);
  if (it == m_pendingArrivals.end()) {
    ++m_nStaleData;
    return;
  }
  m_faceDelay[inFace].addSample(toMilliseconds(now - it->second.at));
  m_pendingArrivals.erase(it);
}

std::vector<FaceId>
NtorrentStrategy::rankNextHops(const FaceDelayTable& faceDelay, const std::vector<NextHop>& nextHops)
{
  std::vector<FaceId> unsampled;
  std::vector<std::pair<double, FaceId>> sampled;
  for (const auto& nh : nextHops) {
    auto it = faceDelay.find(nh.face);
    if (it == faceDelay.end() || it->second.samples == 0) {
      unsampled.push_back(nh.face);
    }
    else {
      sampled.emplace_back(it->second.meanMs, nh.face);
    }
  }
  std::sort(sampled.begin(), sampled.end());

  std::vector<FaceId> ranked = std::move(unsampled);
  for (const auto& [mean, face] : sampled) {
    ranked.push_back(face);
  }
  return ranked;
}

} // namespace ntsim::fw
