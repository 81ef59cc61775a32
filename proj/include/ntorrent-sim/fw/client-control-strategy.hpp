/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#ifndef NTSIM_FW_CLIENT_CONTROL_STRATEGY_HPP
#define NTSIM_FW_CLIENT_CONTROL_STRATEGY_HPP

#include "ntorrent-sim/fw/strategy.hpp"

namespace ntsim::fw {

/// Static best-route baseline: always the lowest-cost usable next hop.
class ClientControlStrategy : public Strategy
{
public:
  static constexpr std::string_view NAME = "client-control";

  std::string_view
  getName() const override
  {
    return NAME;
  }

  std::vector<FaceId>
  afterReceiveInterest(const ndn::Interest& interest, FaceId inFace,
                       const PitEntry& pitEntry, const FibEntry& fibEntry, Time now) override;

  void
  beforeSatisfyInterest(const PitEntry&, FaceId, const ndn::Data&, Time) override
  {
  }

  /// Lowest cost, ties by face id.
  /// @return nullopt when the entry has no next hops
  static std::optional<FaceId>
  choose(const FibEntry& fibEntry);

protected:
  std::vector<FaceId>
  rankNextHops(const FibEntry& fibEntry) const override;
};

} // namespace ntsim::fw

#endif // NTSIM_FW_CLIENT_CONTROL_STRATEGY_HPP
