/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#ifndef NTSIM_FW_NTORRENT_STRATEGY_HPP
#define NTSIM_FW_NTORRENT_STRATEGY_HPP

#include "ntorrent-sim/fw/strategy.hpp"

#include <unordered_map>

namespace ntsim::fw {

/// Running mean of Interest-to-Data delays observed through one face.
struct FaceDelay
{
  uint64_t samples = 0;
  double meanMs = 0.0;

  void
  addSample(double delayMs)
  {
    ++samples;
    meanMs += (delayMs - meanMs) / static_cast<double>(samples);
  }
};

using FaceDelayTable = std::unordered_map<FaceId, FaceDelay>;

/**
 * @brief Delay-ranked forwarding.
 *
 * Every forwarded Interest records its arrival time by name. When the Data
 * comes back, the elapsed time is averaged into the delay of the face it
 * arrived on. Next hops are then tried in increasing order of average delay;
 * faces with no samples yet go first, in FIB order, so every hop gets
 * measured before the ranking settles.
 */
class NtorrentStrategy : public Strategy
{
public:
  static constexpr std::string_view NAME = "ntorrent";

  struct Arrival
  {
    FaceId inFace = INVALID_FACEID;
    Time at{0};
  };

  std::string_view
  getName() const override
  {
    return NAME;
  }

  std::vector<FaceId>
  afterReceiveInterest(const ndn::Interest& interest, FaceId inFace,
                       const PitEntry& pitEntry, const FibEntry& fibEntry, Time now) override;

  void
  beforeSatisfyInterest(const PitEntry& pitEntry, FaceId inFace,
                        const ndn::Data& data, Time now) override;

  /// Unsampled faces first in FIB order, then sampled faces by ascending
  /// mean delay, ties by ascending face id.
  static std::vector<FaceId>
  rankNextHops(const FaceDelayTable& faceDelay, const std::vector<NextHop>& nextHops);

  const FaceDelayTable&
  getFaceDelays() const
  {
    return m_faceDelay;
  }

  const std::unordered_map<ndn::Name, Arrival>&
  getPendingArrivals() const
  {
    return m_pendingArrivals;
  }

  /// Data that arrived with no recorded interest arrival.
  uint64_t
  getStaleDataCount() const
  {
    return m_nStaleData;
  }

protected:
  std::vector<FaceId>
  rankNextHops(const FibEntry& fibEntry) const override
  {
    return rankNextHops(m_faceDelay, fibEntry.nextHops);
  }

private:
  std::unordered_map<ndn::Name, Arrival> m_pendingArrivals;
  FaceDelayTable m_faceDelay;
  uint64_t m_nStaleData = 0;
};

} // namespace ntsim::fw

#endif // NTSIM_FW_NTORRENT_STRATEGY_HPP
