/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#include "ntorrent-sim/routing/topology.hpp"

namespace ntsim::routing {

void
Topology::addNode(NodeId node, FaceId appFace)
{
  m_nodes[node] = appFace;
  m_adjacency[node];
}

void
Topology::setAppFace(NodeId node, FaceId appFace)
{
  if (!hasNode(node)) {
    throw UnknownNode(node);
  }
  m_nodes[node] = appFace;
}

FaceId
Topology::getAppFace(NodeId node) const
{
  auto it = m_nodes.find(node);
  if (it == m_nodes.end()) {
    throw UnknownNode(node);
  }
  return it->second;
}

void
Topology::addLink(const TopologyLink& link)
{
  if (!hasNode(link.a)) {
    throw UnknownNode(link.a);
  }
  if (!hasNode(link.b)) {
    throw UnknownNode(link.b);
  }
  if (link.a == link.b) {
    throw DuplicateLink("DuplicateLink: self-loop on node " + std::to_string(link.a));
  }
  if (hasLink(link.a, link.b)) {
    throw DuplicateLink("DuplicateLink: nodes " + std::to_string(link.a) + " and " +
                        std::to_string(link.b) + " are already linked");
  }
  m_links.push_back(link);
  auto cost = static_cast<fw::RouteCost>(link.delay.count());
  m_adjacency[link.a].push_back({link.b, link.faceA, cost});
  m_adjacency[link.b].push_back({link.a, link.faceB, cost});
}

bool
Topology::hasLink(NodeId a, NodeId b) const
{
  auto it = m_adjacency.find(a);
  if (it == m_adjacency.end()) {
    return false;
  }
  for (const auto& adj : it->second) {
    if (adj.neighbor == b) {
      return true;
    }
  }
  return false;
}

bool
Topology::addOrigin(const ndn::Name& prefix, NodeId node)
{
  if (!hasNode(node)) {
    throw UnknownNode(node);
  }
  return m_origins[prefix].insert(node).second;
}

std::vector<NodeId>
Topology::getNodes() const
{
  std::vector<NodeId> nodes;
  for (const auto& [id, face] : m_nodes) {
    nodes.push_back(id);
  }
  return nodes;
}

const std::vector<Adjacency>&
Topology::getAdjacency(NodeId node) const
{
  auto it = m_adjacency.find(node);
  if (it == m_adjacency.end()) {
    throw UnknownNode(node);
  }
  return it->second;
}

} // namespace ntsim::routing
