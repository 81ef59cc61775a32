/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#ifndef NTSIM_SIM_INVARIANT_AUDITOR_HPP
#define NTSIM_SIM_INVARIANT_AUDITOR_HPP

#include "ntorrent-sim/sim/network.hpp"

#include <map>
#include <string>
#include <vector>

namespace ntsim::sim {

/**
 * Watches a running Network and records forwarding-plane violations:
 * PIT entries without downstream faces or past their expiry, Data sent on a
 * face that never asked for it, and Data whose digest does not verify.
 *
 * Requests are tracked from the packets themselves, independently of the
 * forwarder's own PIT.
 */
class InvariantAuditor : public NetworkObserver
{
public:
  explicit
  InvariantAuditor(Network& network);

  void
  onReceive(const Network&, NodeId node, const fw::Face& face,
            const ndn::Packet& packet, Time now) override;

  void
  onTransmit(const Network&, NodeId node, const fw::Face& face,
             const ndn::Packet& packet, Time now) override;

  void
  afterEvent(const Network& network, Time now) override;

  /// End-of-run checks (strategy callback count per satisfied entry).
  void
  finish(const Network& network);

  const std::vector<std::string>&
  getViolations() const
  {
    return m_violations;
  }

  uint64_t
  getCheckedEvents() const
  {
    return m_nEvents;
  }

  uint64_t
  getCheckedData() const
  {
    return m_nData;
  }

private:
  void
  violation(std::string what);

private:
  std::map<std::pair<NodeId, FaceId>, std::vector<ndn::Name>> m_requested;
  std::vector<std::string> m_violations;
  uint64_t m_nEvents = 0;
  uint64_t m_nData = 0;
};

} // namespace ntsim::sim

#endif // NTSIM_SIM_INVARIANT_AUDITOR_HPP
