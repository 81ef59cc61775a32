/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#ifndef NTSIM_TESTS_ROUTING_ORACLE_HPP
#define NTSIM_TESTS_ROUTING_ORACLE_HPP

#include "ntorrent-sim/routing/global-routing.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>

namespace ntsim::tests {

/// Random connected graph: a random spanning tree plus extra edges.
/// Node ids 0..n-1, app face 1 on every node, link faces from 256 per node.
inline routing::Topology
makeRandomTopology(std::mt19937& rng, size_t nNodes, double extraEdgeProb, int maxDelayMs)
{
  routing::Topology topo;
  for (NodeId n = 0; n < nNodes; ++n) {
    topo.addNode(n, FACEID_APP_BASE);
  }
  std::map<NodeId, FaceId> nextFace;
  std::uniform_int_distribution<int> delay(1, maxDelayMs);
  auto link = [&] (NodeId a, NodeId b) {
    FaceId fa = FACEID_LINK_BASE + nextFace[a]++;
    FaceId fb = FACEID_LINK_BASE + nextFace[b]++;
    topo.addLink({a, b, fa, fb, 1'000'000, milliseconds(delay(rng))});
  };
  for (NodeId n = 1; n < nNodes; ++n) {
    link(static_cast<NodeId>(rng() % n), n);
  }
  std::bernoulli_distribution extra(extraEdgeProb);
  for (NodeId a = 0; a < nNodes; ++a) {
    for (NodeId b = a + 1; b < nNodes; ++b) {
      if (!topo.hasLink(a, b) && extra(rng)) {
        link(a, b);
      }
    }
  }
  return topo;
}

/// Cheapest simple path from @p from to any of @p targets whose first edge
/// uses @p firstFace, by exhaustive depth-first enumeration.
inline std::optional<fw::RouteCost>
bruteForceCostVia(const routing::Topology& topo, NodeId from, FaceId firstFace,
                  const std::set<NodeId>& targets)
{
  std::optional<fw::RouteCost> best;
  std::set<NodeId> visited{from};
  std::function<void(NodeId, fw::RouteCost)> dfs = [&] (NodeId node, fw::RouteCost cost) {
    if (targets.count(node) > 0) {
      if (!best || cost < *best) {
        best = cost;
      }
      return;
    }
    for (const auto& adj : topo.getAdjacency(node)) {
      if (visited.count(adj.neighbor) == 0) {
        visited.insert(adj.neighbor);
        dfs(adj.neighbor, cost + adj.cost);
        visited.erase(adj.neighbor);
      }
    }
  };
  for (const auto& adj : topo.getAdjacency(from)) {
    if (adj.face == firstFace) {
      visited.insert(adj.neighbor);
      dfs(adj.neighbor, adj.cost);
      visited.erase(adj.neighbor);
    }
  }
  return best;
}

/// Cheapest simple path from @p from to any of @p targets (0 if @p from is one).
inline std::optional<fw::RouteCost>
bruteForceDistance(const routing::Topology& topo, NodeId from, const std::set<NodeId>& targets)
{
  if (targets.count(from) > 0) {
    return 0;
  }
  std::optional<fw::RouteCost> best;
  for (const auto& adj : topo.getAdjacency(from)) {
    auto c = bruteForceCostVia(topo, from, adj.face, targets);
    if (c && (!best || *c < *best)) {
      best = c;
    }
  }
  return best;
}

/**
 * Expected next hops of @p node: every neighbor strictly closer to the
 * origins than @p node, costed by the cheapest simple path through it,
 * ordered by cost then face id. All distances by enumeration.
 */
inline std::vector<fw::NextHop>
bruteForceNextHops(const routing::Topology& topo, NodeId node, const std::set<NodeId>& origins)
{
  std::vector<fw::NextHop> hops;
  auto self = bruteForceDistance(topo, node, origins);
  if (!self || *self == 0) {
    return hops;
  }
  for (const auto& adj : topo.getAdjacency(node)) {
    auto d = bruteForceDistance(topo, adj.neighbor, origins);
    if (d && *d < *self) {
      hops.push_back({adj.face, *bruteForceCostVia(topo, node, adj.face, origins)});
    }
  }
  std::sort(hops.begin(), hops.end(), [] (const auto& a, const auto& b) {
    return a.cost != b.cost ? a.cost < b.cost : a.face < b.face;
  });
  return hops;
}

} // namespace ntsim::tests

#endif // NTSIM_TESTS_ROUTING_ORACLE_HPP
