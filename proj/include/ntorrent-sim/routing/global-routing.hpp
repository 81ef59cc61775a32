/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#ifndef NTSIM_ROUTING_GLOBAL_ROUTING_HPP
#define NTSIM_ROUTING_GLOBAL_ROUTING_HPP

#include "ntorrent-sim/routing/topology.hpp"

#include <map>
#include <optional>
#include <set>

namespace ntsim::routing {

/// FIB contents for every node.
using RoutingTable = std::map<NodeId, std::vector<fw::FibEntry>>;

/**
 * Next hops of @p node toward the nearest of @p origins. A neighbor qualifies
 * only if it is strictly closer to the origins than @p node itself, so
 * following any next hop always makes progress and forwarding cannot cycle.
 * Each hop is costed as link delay plus the neighbor's distance, and hops are
 * ordered by ascending cost, then face id. Empty for origins and unreachable nodes.
 */
std::vector<fw::NextHop>
computeNextHops(const Topology& topology, NodeId node, const std::set<NodeId>& origins);

/// Same, given each node's distance to the nearest origin.
std::vector<fw::NextHop>
computeNextHops(const Topology& topology, NodeId node, const std::map<NodeId, fw::RouteCost>& dist);

/**
 * @brief Computes every node's FIB from the topology and the announced origins.
 *
 * Link cost is propagation delay. A route on a prefix also covers longer
 * announced names beneath it. For each prefix, a node that is itself an
 * origin (directly or through a shorter prefix) gets a cost-0 route to its
 * application face; any other node gets the next hops of computeNextHops().
 */
RoutingTable
calculateRoutes(const Topology& topology);

/**
 * Origin bookkeeping for routing announcements with recompute coalescing:
 * any number of announcements between two recomputes produce one recompute.
 */
class GlobalRouting
{
public:
  struct AnnounceResult
  {
    /// the node was not an origin of the name before
    bool isNewOrigin = false;
    /// caller should schedule a recompute (none is pending yet)
    bool needsRecomputeSchedule = false;
  };

  Topology&
  getTopology()
  {
    return m_topology;
  }

  const Topology&
  getTopology() const
  {
    return m_topology;
  }

  /// AddOrigin analogue; marks routes dirty.
  AnnounceResult
  announce(NodeId node, const ndn::Name& name);

  bool
  isRecomputePending() const
  {
    return m_recomputePending;
  }

  /// CalculateRoutes analogue; clears the pending marker.
  RoutingTable
  recompute();

  uint64_t
  getRecomputeCount() const
  {
    return m_nRecomputes;
  }

private:
  Topology m_topology;
  bool m_recomputePending = false;
  uint64_t m_nRecomputes = 0;
};

} // namespace ntsim::routing

#endif // NTSIM_ROUTING_GLOBAL_ROUTING_HPP
