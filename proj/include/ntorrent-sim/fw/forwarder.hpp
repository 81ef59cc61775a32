/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#ifndef NTSIM_FW_FORWARDER_HPP
#define NTSIM_FW_FORWARDER_HPP

#include "ntorrent-sim/fw/content-store.hpp"
#include "ntorrent-sim/fw/face.hpp"
#include "ntorrent-sim/fw/fib.hpp"
#include "ntorrent-sim/fw/pit.hpp"
#include "ntorrent-sim/fw/strategy.hpp"

#include <functional>
#include <map>
#include <memory>

namespace ntsim::fw {

/// A packet the forwarder wants sent out of one of its faces.
struct Emission
{
  FaceId face = INVALID_FACEID;
  ndn::Packet packet;
};

struct ForwarderCounters
{
  uint64_t nInInterests = 0;
  uint64_t nInData = 0;
  uint64_t nInNacks = 0;
  uint64_t nCsHits = 0;
  uint64_t nCsMisses = 0;
  uint64_t nAggregated = 0;
  uint64_t nDuplicateNonces = 0;
  /// Interests refused because they came back from a pending upstream
  uint64_t nLoopNacks = 0;
  uint64_t nNoRoute = 0;
  uint64_t nUnsolicitedData = 0;
  uint64_t nStaleNacks = 0;
  uint64_t nNackRetries = 0;
  uint64_t nSatisfiedEntries = 0;
  uint64_t nBeforeSatisfyCallbacks = 0;
  uint64_t nExpiredEntries = 0;
};

struct ForwarderOptions
{
  size_t csCapacity = ContentStore::UNLIMITED;
  /// when false, the Content Store is neither filled nor consulted
  bool csEnabled = true;
};

/**
 * @brief Per-node NDN forwarding plane.
 *
 * Each pipeline call takes the arrival face and the current simulation time
 * and returns the packets to transmit. PIT expiry needs a timer: the owner
 * installs a hook that is called with every newly armed expiry time and must
 * later call expirePendingInterests() at or after that time.
 */
class Forwarder
{
public:
  using ExpiryTimerHook = std::function<void(Time)>;

  explicit
  Forwarder(NodeId node = 0, ForwarderOptions options = {});

  NodeId
  getNodeId() const
  {
    return m_node;
  }

  void
  addFace(const Face& face);

  const Face*
  getFace(FaceId id) const;

  const std::map<FaceId, Face>&
  getFaces() const
  {
    return m_faces;
  }

  void
  setStrategy(std::unique_ptr<Strategy> strategy);

  Strategy&
  getStrategy()
  {
    return *m_strategy;
  }

  void
  setExpiryTimerHook(ExpiryTimerHook hook)
  {
    m_armTimer = std::move(hook);
  }

  std::vector<Emission>
  onIncomingInterest(FaceId inFace, ndn::Interest interest, Time now);

  std::vector<Emission>
  onIncomingData(FaceId inFace, const ndn::Data& data, Time now);

  std::vector<Emission>
  onIncomingNack(FaceId inFace, const ndn::Nack& nack, Time now);

  /// Drops every PIT entry whose lifetime has ended by @p now.
  void
  expirePendingInterests(Time now);

  ContentStore&
  getCs()
  {
    return m_cs;
  }

  const ContentStore&
  getCs() const
  {
    return m_cs;
  }

  Pit&
  getPit()
  {
    return m_pit;
  }

  const Pit&
  getPit() const
  {
    return m_pit;
  }

  Fib&
  getFib()
  {
    return m_fib;
  }

  const Fib&
  getFib() const
  {
    return m_fib;
  }

  const ForwarderCounters&
  getCounters() const
  {
    return m_counters;
  }

  const ForwarderOptions&
  getOptions() const
  {
    return m_options;
  }

private:
  bool
  isApplicationFace(FaceId face) const;

  /// Asks the strategy for a next hop and sends; Nacks back when there is none.
  void
  forwardInterest(PitEntry& entry, FaceId inFace, Time now, std::vector<Emission>& out);

  void
  armExpiry(Time at);

private:
  NodeId m_node;
  ForwarderOptions m_options;
  std::map<FaceId, Face> m_faces;
  ContentStore m_cs;
  Pit m_pit;
  Fib m_fib;
  std::unique_ptr<Strategy> m_strategy;
  ExpiryTimerHook m_armTimer;
  ForwarderCounters m_counters;
};

} // namespace ntsim::fw

#endif // NTSIM_FW_FORWARDER_HPP
