/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#include "ntorrent-sim/routing/global-routing.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

namespace ntsim::routing {

namespace {

constexpr fw::RouteCost INF = std::numeric_limits<fw::RouteCost>::max();

/// Multi-source Dijkstra: distance from every node to its nearest node in @p origins.
std::map<NodeId, fw::RouteCost>
distancesToNearest(const Topology& topology, const std::set<NodeId>& origins)
{
  std::map<NodeId, fw::RouteCost> dist;
  using Item = std::pair<fw::RouteCost, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (NodeId origin : origins) {
    if (topology.hasNode(origin)) {
      dist[origin] = 0;
      queue.push({0, origin});
    }
  }
  while (!queue.empty()) {
    auto [d, node] = queue.top();
    queue.pop();
    if (d > dist[node]) {
      continue;
    }
    for (const auto& adj : topology.getAdjacency(node)) {
      fw::RouteCost nd = d + adj.cost;
      auto it = dist.find(adj.neighbor);
      if (it == dist.end() || nd < it->second) {
        dist[adj.neighbor] = nd;
        queue.push({nd, adj.neighbor});
      }
    }
  }
  return dist;
}

} // namespace

std::vector<fw::NextHop>
computeNextHops(const Topology& topology, NodeId node, const std::set<NodeId>& origins)
{
  if (!topology.hasNode(node)) {
    throw UnknownNode(node);
  }
  return computeNextHops(topology, node, distancesToNearest(topology, origins));
}

std::vector<fw::NextHop>
computeNextHops(const Topology& topology, NodeId node, const std::map<NodeId, fw::RouteCost>& dist)
{
  std::vector<fw::NextHop> hops;
  auto self = dist.find(node);
  if (self == dist.end() || self->second == 0) {
    return hops;
  }
  for (const auto& adj : topology.getAdjacency(node)) {
    auto d = dist.find(adj.neighbor);
    if (d != dist.end() && d->second < self->second) {
      hops.push_back({adj.face, adj.cost + d->second});
    }
  }
  std::sort(hops.begin(), hops.end(), [] (const auto& a, const auto& b) {
    return a.cost != b.cost ? a.cost < b.cost : a.face < b.face;
  });
  return hops;
}

RoutingTable
calculateRoutes(const Topology& topology)
{
  const auto& origins = topology.getOrigins();

  // effective origins: a prefix inherits the origins of every shorter announced prefix
  std::map<ndn::Name, std::set<NodeId>> effective;
  for (const auto& [prefix, nodes] : origins) {
    auto& all = effective[prefix];
    for (const auto& [other, otherNodes] : origins) {
      if (other.isPrefixOf(prefix)) {
        all.insert(otherNodes.begin(), otherNodes.end());
      }
    }
  }

  std::map<std::set<NodeId>, std::map<NodeId, fw::RouteCost>> distCache;
  RoutingTable table;
  for (NodeId node : topology.getNodes()) {
    table[node];
  }
  for (const auto& [prefix, nodes] : effective) {
    auto cached = distCache.find(nodes);
    if (cached == distCache.end()) {
      cached = distCache.emplace(nodes, distancesToNearest(topology, nodes)).first;
    }
    for (NodeId node : topology.getNodes()) {
      fw::FibEntry entry;
      entry.prefix = prefix;
      if (nodes.count(node) > 0) {
        FaceId appFace = topology.getAppFace(node);
        if (appFace != INVALID_FACEID) {
          entry.nextHops.push_back({appFace, 0});
          table[node].push_back(std::move(entry));
        }
        continue;
      }
      entry.nextHops = computeNextHops(topology, node, cached->second);
      if (!entry.nextHops.empty()) {
        table[node].push_back(std::move(entry));
      }
    }
  }
  return table;
}

GlobalRouting::AnnounceResult
GlobalRouting::announce(NodeId node, const ndn::Name& name)
{
  AnnounceResult result;
  result.isNewOrigin = m_topology.addOrigin(name, node);
  if (result.isNewOrigin && !m_recomputePending) {
    m_recomputePending = true;
    result.needsRecomputeSchedule = true;
  }
  return result;
}

RoutingTable
GlobalRouting::recompute()
{
  m_recomputePending = false;
  ++m_nRecomputes;
  return calculateRoutes(m_topology);
}

} // namespace ntsim::routing
