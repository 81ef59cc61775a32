/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#ifndef NTSIM_SIM_NETWORK_HPP
#define NTSIM_SIM_NETWORK_HPP

#include "ntorrent-sim/apps/consumer.hpp"
#include "ntorrent-sim/apps/producer.hpp"
#include "ntorrent-sim/fw/forwarder.hpp"
#include "ntorrent-sim/routing/global-routing.hpp"
#include "ntorrent-sim/sim/link.hpp"
#include "ntorrent-sim/sim/simulator.hpp"

#include <iosfwd>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace ntsim::sim {

class Network;

/// Passive hooks on packet movement. Transmit means leaving a forwarder
/// through a face; receive means entering a forwarder from a face.
class NetworkObserver
{
public:
  virtual
  ~NetworkObserver() = default;

  virtual void
  onTransmit(const Network&, NodeId, const fw::Face&, const ndn::Packet&, Time)
  {
  }

  virtual void
  onReceive(const Network&, NodeId, const fw::Face&, const ndn::Packet&, Time)
  {
  }

  virtual void
  afterEvent(const Network&, Time)
  {
  }
};

enum class NodeRole {
  Router,
  Seeder,
  Consumer,
};

std::string_view
toString(NodeRole role);

struct NodeSpec
{
  std::string name;
  NodeRole role = NodeRole::Router;
  /// when the application starts
  Time start{0};
};

enum class StrategyKind {
  Ntorrent,
  ClientControl,
};

std::string_view
toString(StrategyKind kind);

std::unique_ptr<fw::Strategy>
makeStrategy(StrategyKind kind);

struct NetworkOptions
{
  StrategyKind strategy = StrategyKind::Ntorrent;
  fw::ForwarderOptions forwarder;
  torrent::TorrentParams torrent;
  apps::ConsumerOptions consumer;
  uint32_t seed = 1;
};

struct CompletionRecord
{
  NodeId node;
  Time start;
  Time finish;
};

/**
 * @brief A set of NDN nodes joined by links, driven by one Simulator.
 *
 * Owns the forwarders, applications, links and the global routing state,
 * and moves packets between them. Scenario code builds it with
 * createLink() and createAndInstall().
 */
class Network
{
public:
  struct Node
  {
    NodeId id = INVALID_NODE;
    std::string name;
    NodeRole role = NodeRole::Router;
    std::unique_ptr<fw::Forwarder> forwarder;
    FaceId appFace = INVALID_FACEID;
    std::unique_ptr<apps::AppHost> host;
    std::unique_ptr<apps::TorrentApp> app;
    Time appStart{0};
  };

  explicit
  Network(NetworkOptions options = {});

  ~Network();

  Network(const Network&) = delete;
  Network& operator=(const Network&) = delete;

  /// Adds a bare node (no app) with its forwarder and strategy.
  NodeId
  addNode(std::string name);

  /// createLink: joins two nodes, adding one link face on each.
  /// @throw routing::DuplicateLink if they are already linked
  /// @throw Link::ConfigError on an invalid rate or delay
  Link&
  createLink(NodeId a, NodeId b, uint64_t dataRateBps, Time delay);

  /// createAndInstall: a node with its forwarder, strategy and, for seeders and
  /// consumers, the application bound to a new app face.
  NodeId
  createAndInstall(const NodeSpec& spec);

  /// Runs until every consumer completes (and links drain), a consumer fails,
  /// the queue empties, or @p maxSimTime.
  RunReport
  run(Time maxSimTime);

  /// Routing announcement on behalf of @p node's application.
  void
  announce(NodeId node, const ndn::Name& name);

  /// CalculateRoutes now and reinstall every FIB.
  void
  recomputeRoutes();

  void
  addObserver(NetworkObserver* observer)
  {
    m_observers.push_back(observer);
  }

  /// Textual packet log; also receives application verbose output.
  void
  setEventLog(std::ostream* os)
  {
    m_eventLog = os;
  }

  Simulator&
  getSimulator()
  {
    return m_sim;
  }

  Time
  now() const
  {
    return m_sim.now();
  }

  const Node&
  getNode(NodeId id) const
  {
    return *m_nodes.at(id);
  }

  Node&
  getNode(NodeId id)
  {
    return *m_nodes.at(id);
  }

  /// @throw std::out_of_range for unknown names
  NodeId
  findNode(std::string_view name) const;

  size_t
  getNodeCount() const
  {
    return m_nodes.size();
  }

  const std::vector<std::unique_ptr<Link>>&
  getLinks() const
  {
    return m_links;
  }

  const Link&
  getLinkOfFace(NodeId node, FaceId face) const;

  routing::GlobalRouting&
  getRouting()
  {
    return m_routing;
  }

  const routing::GlobalRouting&
  getRouting() const
  {
    return m_routing;
  }

  const NetworkOptions&
  getOptions() const
  {
    return m_options;
  }

  /// Consumer app on @p node, or nullptr.
  const apps::ConsumerApp*
  getConsumer(NodeId node) const;

  const apps::ProducerApp*
  getProducer(NodeId node) const;

  std::vector<NodeId>
  getConsumerNodes() const;

  const std::vector<CompletionRecord>&
  getCompletions() const
  {
    return m_completions;
  }

  bool
  allConsumersComplete() const;

  bool
  hasFailure() const
  {
    return !m_failures.empty();
  }

  const std::vector<std::string>&
  getFailures() const
  {
    return m_failures;
  }

  /// True once all consumers completed; periodic tasks should stop rescheduling.
  bool
  isWindingDown() const
  {
    return allConsumersComplete() || hasFailure();
  }

  uint64_t
  getLinkPacketsSent() const
  {
    return m_nLinkSent;
  }

  uint64_t
  getLinkPacketsDelivered() const
  {
    return m_nLinkDelivered;
  }

  uint64_t
  getNoncesDrawn() const
  {
    return m_nNonces;
  }

private:
  class Host;
  friend class Host;

  void
  deliver(NodeId node, FaceId inFace, ndn::Packet packet);

  void
  emit(NodeId node, std::vector<fw::Emission> emissions);

  void
  deliverToApp(NodeId node, const ndn::Packet& packet);

  void
  logPacket(std::string_view direction, NodeId node, FaceId face, const ndn::Packet& packet);

  uint32_t
  generateNonce();

  void
  onConsumerCompleted(NodeId node);

  void
  onConsumerFailed(NodeId node, const std::string& reason);

  void
  logLine(NodeId node, std::string_view line);

private:
  NetworkOptions m_options;
  Simulator m_sim;
  std::vector<std::unique_ptr<Node>> m_nodes;
  std::vector<std::unique_ptr<Link>> m_links;
  std::map<std::pair<NodeId, FaceId>, LinkId> m_faceToLink;
  std::map<NodeId, FaceId> m_nextLinkFace;
  routing::GlobalRouting m_routing;
  std::mt19937 m_rng;
  std::vector<NetworkObserver*> m_observers;
  std::ostream* m_eventLog = nullptr;
  std::vector<CompletionRecord> m_completions;
  std::vector<std::string> m_failures;
  uint64_t m_nLinkSent = 0;
  uint64_t m_nLinkDelivered = 0;
  uint64_t m_nNonces = 0;
};

} // namespace ntsim::sim

#endif // NTSIM_SIM_NETWORK_HPP
