/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#ifndef NTSIM_ROUTING_TOPOLOGY_HPP
#define NTSIM_ROUTING_TOPOLOGY_HPP

#include "ntorrent-sim/fw/fib.hpp"
#include "ntorrent-sim/ndn/name.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace ntsim::routing {

class UnknownNode : public std::invalid_argument
{
public:
  explicit
  UnknownNode(NodeId node)
    : std::invalid_argument("UnknownNode: " + std::to_string(node))
  {
  }
};

class DuplicateLink : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

struct TopologyLink
{
  NodeId a = INVALID_NODE;
  NodeId b = INVALID_NODE;
  /// face of this link on node a and on node b
  FaceId faceA = INVALID_FACEID;
  FaceId faceB = INVALID_FACEID;
  uint64_t dataRateBps = 0;
  Time delay{0};
};

struct Adjacency
{
  NodeId neighbor;
  FaceId face;
  fw::RouteCost cost;
};

/**
 * Node/link graph plus the set of nodes announcing each name prefix.
 * Links are bidirectional and at most one exists per node pair.
 */
class Topology
{
public:
  void
  addNode(NodeId node, FaceId appFace = INVALID_FACEID);

  bool
  hasNode(NodeId node) const
  {
    return m_nodes.count(node) > 0;
  }

  void
  setAppFace(NodeId node, FaceId appFace);

  FaceId
  getAppFace(NodeId node) const;

  /// @throw UnknownNode, DuplicateLink
  void
  addLink(const TopologyLink& link);

  bool
  hasLink(NodeId a, NodeId b) const;

  /// @return true if @p node was not already an origin of @p prefix
  /// @throw UnknownNode
  bool
  addOrigin(const ndn::Name& prefix, NodeId node);

  const std::map<ndn::Name, std::set<NodeId>>&
  getOrigins() const
  {
    return m_origins;
  }

  std::vector<NodeId>
  getNodes() const;

  const std::vector<TopologyLink>&
  getLinks() const
  {
    return m_links;
  }

  /// Neighbors of @p node in link creation order.
  const std::vector<Adjacency>&
  getAdjacency(NodeId node) const;

private:
  std::map<NodeId, FaceId> m_nodes;
  std::map<NodeId, std::vector<Adjacency>> m_adjacency;
  std::vector<TopologyLink> m_links;
  std::map<ndn::Name, std::set<NodeId>> m_origins;
};

} // namespace ntsim::routing

#endif // NTSIM_ROUTING_TOPOLOGY_HPP
