/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#ifndef NTSIM_FW_STRATEGY_HPP
#define NTSIM_FW_STRATEGY_HPP

#include "ntorrent-sim/fw/fib.hpp"
#include "ntorrent-sim/fw/pit.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace ntsim::fw {

/**
 * @brief Forwarding strategy hooks invoked by the Forwarder pipelines.
 *
 * The forwarder sends on the first face of the returned ranking; an empty
 * ranking means there is no viable next hop and the interest is Nacked.
 */
class Strategy
{
public:
  virtual
  ~Strategy() = default;

  virtual std::string_view
  getName() const = 0;

  virtual std::vector<FaceId>
  afterReceiveInterest(const ndn::Interest& interest, FaceId inFace,
                       const PitEntry& pitEntry, const FibEntry& fibEntry, Time now) = 0;

  virtual void
  beforeSatisfyInterest(const PitEntry& pitEntry, FaceId inFace,
                        const ndn::Data& data, Time now) = 0;

  /// Picks a face for one retry after @p inFace Nacked; nullopt gives up.
  virtual std::optional<FaceId>
  afterReceiveNack(const ndn::Nack& nack, FaceId inFace,
                   const PitEntry& pitEntry, const FibEntry* fibEntry, Time now);

protected:
  /// Preference order over the entry's next hops, before any exclusion.
  virtual std::vector<FaceId>
  rankNextHops(const FibEntry& fibEntry) const = 0;

  /// Drops faces that are downstream of @p pitEntry or already tried.
  static std::vector<FaceId>
  excludeUnusable(std::vector<FaceId> ranked, const PitEntry& pitEntry, bool excludeTried);
};

} // namespace ntsim::fw

#endif // NTSIM_FW_STRATEGY_HPP
