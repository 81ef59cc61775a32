/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#include "ntorrent-sim/sim/invariant-auditor.hpp"

#include <algorithm>

namespace ntsim::sim {

InvariantAuditor::InvariantAuditor(Network& network)
{
  network.addObserver(this);
}

void
InvariantAuditor::violation(std::string what)
{
  // keep the report readable on a badly broken run
  if (m_violations.size() < 1000) {
    m_violations.push_back(std::move(what));
  }
}

void
InvariantAuditor::onReceive(const Network&, NodeId node, const fw::Face& face,
                            const ndn::Packet& packet, Time)
{
  if (const auto* interest = std::get_if<ndn::Interest>(&packet)) {
    m_requested[{node, face.id}].push_back(interest->name);
  }
}

void
InvariantAuditor::onTransmit(const Network& network, NodeId node, const fw::Face& face,
                             const ndn::Packet& packet, Time now)
{
  auto& requested = m_requested[{node, face.id}];

  if (const auto* nack = std::get_if<ndn::Nack>(&packet)) {
    auto it = std::find(requested.begin(), requested.end(), nack->name);
    if (it != requested.end()) {
      requested.erase(it);
    }
    return;
  }

  const auto* data = std::get_if<ndn::Data>(&packet);
  if (data == nullptr) {
    return;
  }
  ++m_nData;
  const auto& nodeName = network.getNode(node).name;
  if (!data->verify()) {
    violation(formatMilliseconds(now) + " " + nodeName + ": Data " + data->getName().toUri() +
              " fails digest verification");
  }
  auto end = std::remove_if(requested.begin(), requested.end(),
                            [data] (const ndn::Name& name) { return data->canSatisfy(name); });
  if (end == requested.end()) {
    violation(formatMilliseconds(now) + " " + nodeName + ": unsolicited Data " +
              data->getName().toUri() + " sent on face " + std::to_string(face.id));
  }
  requested.erase(end, requested.end());

  const auto& pit = network.getNode(node).forwarder->getPit();
  if (pit.find(data->getName()) != nullptr || pit.find(data->getFullName()) != nullptr) {
    violation(formatMilliseconds(now) + " " + nodeName + ": PIT entry for " +
              data->getName().toUri() + " survived satisfaction");
  }
}

void
InvariantAuditor::afterEvent(const Network& network, Time now)
{
  ++m_nEvents;
  for (NodeId id = 0; id < network.getNodeCount(); ++id) {
    const auto& node = network.getNode(id);
    for (const auto& [name, entry] : node.forwarder->getPit().entries()) {
      if (entry.inRecords.empty()) {
        violation(formatMilliseconds(now) + " " + node.name + ": PIT entry " + name.toUri() +
                  " has no in-record");
      }
      if (entry.expiry < now) {
        violation(formatMilliseconds(now) + " " + node.name + ": PIT entry " + name.toUri() +
                  " outlived its expiry " + formatMilliseconds(entry.expiry));
      }
    }
  }
}

void
InvariantAuditor::finish(const Network& network)
{
  for (NodeId id = 0; id < network.getNodeCount(); ++id) {
    const auto& node = network.getNode(id);
    const auto& counters = node.forwarder->getCounters();
    if (counters.nBeforeSatisfyCallbacks != counters.nSatisfiedEntries) {
      violation(node.name + ": " + std::to_string(counters.nBeforeSatisfyCallbacks) +
                " before-satisfy callbacks for " + std::to_string(counters.nSatisfiedEntries) +
                " satisfied entries");
    }
  }
}

} // namespace ntsim::sim
