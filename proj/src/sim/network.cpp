/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#include "ntorrent-sim/sim/network.hpp"
#include "ntorrent-sim/fw/client-control-strategy.hpp"
#include "ntorrent-sim/fw/ntorrent-strategy.hpp"

#include <ostream>

namespace ntsim::sim {

std::string_view
toString(NodeRole role)
{
  switch (role) {
  case NodeRole::Router:
    return "router";
  case NodeRole::Seeder:
    return "seeder";
  case NodeRole::Consumer:
    return "consumer";
  }
  return "unknown";
}

std::string_view
toString(StrategyKind kind)
{
  return kind == StrategyKind::Ntorrent ? fw::NtorrentStrategy::NAME : fw::ClientControlStrategy::NAME;
}

std::unique_ptr<fw::Strategy>
makeStrategy(StrategyKind kind)
{
  if (kind == StrategyKind::ClientControl) {
    return std::make_unique<fw::ClientControlStrategy>();
  }
  return std::make_unique<fw::NtorrentStrategy>();
}

/// AppHost bound to one node.
class Network::Host : public apps::AppHost
{
public:
  Host(Network& network, NodeId node)
    : m_network(network)
    , m_node(node)
  {
  }

  Time
  now() const override
  {
    return m_network.now();
  }

  void
  expressInterest(const ndn::Interest& interest) override
  {
    m_network.deliver(m_node, appFace(), interest);
  }

  void
  putData(const ndn::Data& data) override
  {
    ndn::Data copy = data;
    copy.tags = {};
    copy.tags.originNode = m_node;
    copy.tags.originFace = appFace();
    m_network.deliver(m_node, appFace(), std::move(copy));
  }

  void
  putNack(const ndn::Nack& nack) override
  {
    m_network.deliver(m_node, appFace(), nack);
  }

  void
  scheduleAfter(Time delay, std::function<void()> callback) override
  {
    m_network.m_sim.scheduleAfter(delay, std::move(callback));
  }

  uint32_t
  generateNonce() override
  {
    return m_network.generateNonce();
  }

  void
  announce(const ndn::Name& name) override
  {
    m_network.announce(m_node, name);
  }

  void
  onCompleted() override
  {
    m_network.onConsumerCompleted(m_node);
  }

  void
  onFailed(const std::string& reason) override
  {
    m_network.onConsumerFailed(m_node, reason);
  }

  void
  log(std::string_view line) override
  {
    m_network.logLine(m_node, line);
  }

private:
  FaceId
  appFace() const
  {
    return m_network.getNode(m_node).appFace;
  }

private:
  Network& m_network;
  NodeId m_node;
};

Network::Network(NetworkOptions options)
  : m_options(std::move(options))
  , m_rng(m_options.seed)
{
  m_options.torrent.validate();
}

Network::~Network() = default;

NodeId
Network::addNode(std::string name)
{
  auto id = static_cast<NodeId>(m_nodes.size());
  auto node = std::make_unique<Node>();
  node->id = id;
  node->name = name.empty() ? "N" + std::to_string(id) : std::move(name);
  node->forwarder = std::make_unique<fw::Forwarder>(id, m_options.forwarder);
  node->forwarder->setStrategy(makeStrategy(m_options.strategy));
  node->forwarder->setExpiryTimerHook([this, id] (Time at) {
    m_sim.schedule(at, [this, id] { m_nodes[id]->forwarder->expirePendingInterests(m_sim.now()); });
  });
  m_nodes.push_back(std::move(node));
  m_nextLinkFace[id] = FACEID_LINK_BASE;
  m_routing.getTopology().addNode(id);
  return id;
}

Link&
Network::createLink(NodeId a, NodeId b, uint64_t dataRateBps, Time delay)
{
  if (a >= m_nodes.size()) {
    throw routing::UnknownNode(a);
  }
  if (b >= m_nodes.size()) {
    throw routing::UnknownNode(b);
  }
  if (a == b || m_routing.getTopology().hasLink(a, b)) {
    throw routing::DuplicateLink("DuplicateLink: " + m_nodes[a]->name + " and " + m_nodes[b]->name +
                                 " are already linked");
  }

  auto id = static_cast<LinkId>(m_links.size());
  LinkEndpoint endA{a, m_nextLinkFace[a]};
  LinkEndpoint endB{b, m_nextLinkFace[b]};
  auto link = std::make_unique<Link>(id, endA, endB, dataRateBps, delay);

  ++m_nextLinkFace[a];
  ++m_nextLinkFace[b];
  m_nodes[a]->forwarder->addFace(fw::Face{endA.face, fw::FaceKind::Link, id, b, 0});
  m_nodes[b]->forwarder->addFace(fw::Face{endB.face, fw::FaceKind::Link, id, a, 0});
  m_faceToLink[{a, endA.face}] = id;
  m_faceToLink[{b, endB.face}] = id;
  m_routing.getTopology().addLink({a, b, endA.face, endB.face, dataRateBps, delay});

  m_links.push_back(std::move(link));
  return *m_links.back();
}

NodeId
Network::createAndInstall(const NodeSpec& spec)
{
  NodeId id = addNode(spec.name);
  Node& node = *m_nodes[id];
  node.role = spec.role;
  if (spec.role == NodeRole::Router) {
    return id;
  }

  node.appFace = FACEID_APP_BASE;
  node.forwarder->addFace(fw::Face{node.appFace, fw::FaceKind::Application, 0, INVALID_NODE, 0});
  m_routing.getTopology().setAppFace(id, node.appFace);
  node.host = std::make_unique<Host>(*this, id);
  node.appStart = spec.start;
  if (spec.role == NodeRole::Seeder) {
    node.app = std::make_unique<apps::ProducerApp>(*node.host, torrent::buildTorrent(m_options.torrent));
  }
  else {
    node.app = std::make_unique<apps::ConsumerApp>(*node.host, m_options.torrent, m_options.consumer);
  }
  return id;
}

NodeId
Network::findNode(std::string_view name) const
{
  for (const auto& node : m_nodes) {
    if (node->name == name) {
      return node->id;
    }
  }
  throw std::out_of_range("unknown node '" + std::string(name) + "'");
}

const Link&
Network::getLinkOfFace(NodeId node, FaceId face) const
{
  return *m_links.at(m_faceToLink.at({node, face}));
}

const apps::ConsumerApp*
Network::getConsumer(NodeId node) const
{
  return dynamic_cast<const apps::ConsumerApp*>(m_nodes.at(node)->app.get());
}

const apps::ProducerApp*
Network::getProducer(NodeId node) const
{
  return dynamic_cast<const apps::ProducerApp*>(m_nodes.at(node)->app.get());
}

std::vector<NodeId>
Network::getConsumerNodes() const
{
  std::vector<NodeId> out;
  for (const auto& node : m_nodes) {
    if (node->role == NodeRole::Consumer) {
      out.push_back(node->id);
    }
  }
  return out;
}

bool
Network::allConsumersComplete() const
{
  auto consumers = getConsumerNodes();
  return !consumers.empty() && m_completions.size() == consumers.size();
}

RunReport
Network::run(Time maxSimTime)
{
  for (const auto& node : m_nodes) {
    if (node->app) {
      apps::TorrentApp* app = node->app.get();
      m_sim.schedule(node->appStart, [app] { app->start(); });
    }
  }

  m_sim.setAfterEventHook([this] (Time now) {
    for (auto* observer : m_observers) {
      observer->afterEvent(*this, now);
    }
  });

  return m_sim.run(maxSimTime, [this] {
    return hasFailure() || (allConsumersComplete() && m_nLinkSent == m_nLinkDelivered);
  });
}

void
Network::announce(NodeId node, const ndn::Name& name)
{
  Node& n = *m_nodes.at(node);
  if (n.appFace != INVALID_FACEID) {
    n.forwarder->getFib().addOrUpdateNextHop(name, n.appFace, 0);
  }
  auto result = m_routing.announce(node, name);
  if (result.needsRecomputeSchedule) {
    m_sim.schedule(m_sim.now(), [this] { recomputeRoutes(); });
  }
}

void
Network::recomputeRoutes()
{
  auto table = m_routing.recompute();
  for (auto& node : m_nodes) {
    auto& fib = node->forwarder->getFib();
    fib.clear();
    for (const auto& entry : table[node->id]) {
      for (const auto& nh : entry.nextHops) {
        fib.addOrUpdateNextHop(entry.prefix, nh.face, nh.cost);
      }
    }
  }
}

void
Network::deliver(NodeId node, FaceId inFace, ndn::Packet packet)
{
  Node& n = *m_nodes.at(node);
  const fw::Face* face = n.forwarder->getFace(inFace);
  if (face == nullptr) {
    throw InternalError("packet delivered on unknown face " + std::to_string(inFace));
  }
  Time now = m_sim.now();
  logPacket("in", node, inFace, packet);
  for (auto* observer : m_observers) {
    observer->onReceive(*this, node, *face, packet, now);
  }

  std::vector<fw::Emission> emissions = std::visit([&] (auto& p) {
    using T = std::decay_t<decltype(p)>;
    if constexpr (std::is_same_v<T, ndn::Interest>)
      return n.forwarder->onIncomingInterest(inFace, std::move(p), now);
    else if constexpr (std::is_same_v<T, ndn::Data>)
      return n.forwarder->onIncomingData(inFace, p, now);
    else
      return n.forwarder->onIncomingNack(inFace, p, now);
  }, packet);
  emit(node, std::move(emissions));
}

void
Network::emit(NodeId node, std::vector<fw::Emission> emissions)
{
  Node& n = *m_nodes.at(node);
  Time now = m_sim.now();
  for (auto& emission : emissions) {
    const fw::Face* face = n.forwarder->getFace(emission.face);
    if (face == nullptr) {
      throw InternalError("forwarder emitted on unknown face " + std::to_string(emission.face));
    }
    if (auto* data = std::get_if<ndn::Data>(&emission.packet); data != nullptr && !face->isApplication()) {
      data->tags.path.push_back(node);
    }
    logPacket("out", node, emission.face, emission.packet);
    for (auto* observer : m_observers) {
      observer->onTransmit(*this, node, *face, emission.packet, now);
    }

    if (face->isApplication()) {
      m_sim.schedule(now, [this, node, packet = std::move(emission.packet)] { deliverToApp(node, packet); });
      continue;
    }

    Link& link = *m_links.at(face->link);
    Time arrival = link.transmit(node, ndn::wireSize(emission.packet), now);
    const LinkEndpoint& remote = link.getRemote(node);
    ++m_nLinkSent;
    m_sim.schedule(arrival, [this, remote, packet = std::move(emission.packet)] () mutable {
      ++m_nLinkDelivered;
      deliver(remote.node, remote.face, std::move(packet));
    });
  }
}

void
Network::deliverToApp(NodeId node, const ndn::Packet& packet)
{
  apps::TorrentApp* app = m_nodes.at(node)->app.get();
  if (app == nullptr) {
    return;
  }
  std::visit([app] (const auto& p) {
    using T = std::decay_t<decltype(p)>;
    if constexpr (std::is_same_v<T, ndn::Interest>)
      app->onInterest(p);
    else if constexpr (std::is_same_v<T, ndn::Data>)
      app->onData(p);
    else
      app->onNack(p);
  }, packet);
}

void
Network::logPacket(std::string_view direction, NodeId node, FaceId face, const ndn::Packet& packet)
{
  if (m_eventLog == nullptr) {
    return;
  }
  std::ostream& os = *m_eventLog;
  os << formatMilliseconds(m_sim.now()) << ' ' << m_nodes[node]->name << ' ' << direction
     << " face=" << face << ' ';
  std::visit([&os] (const auto& p) {
    using T = std::decay_t<decltype(p)>;
    if constexpr (std::is_same_v<T, ndn::Interest>)
      os << "Interest " << p.name << " nonce=" << p.nonce << " hops=" << p.hopCount;
    else if constexpr (std::is_same_v<T, ndn::Data>)
      os << "Data " << p.getName() << " bytes=" << p.getContent().size();
    else
      os << "Nack " << p.name << " nonce=" << p.nonce << " reason=" << ndn::toString(p.reason);
  }, packet);
  os << '\n';
}

uint32_t
Network::generateNonce()
{
  ++m_nNonces;
  return static_cast<uint32_t>(m_rng());
}

void
Network::onConsumerCompleted(NodeId node)
{
  const auto* consumer = getConsumer(node);
  m_completions.push_back({node, consumer->getStartTime().value_or(Time{0}), m_sim.now()});
  logLine(node, "completed download");
}

void
Network::onConsumerFailed(NodeId node, const std::string& reason)
{
  m_failures.push_back(m_nodes.at(node)->name + ": " + reason);
  logLine(node, "failed: " + reason);
}

void
Network::logLine(NodeId node, std::string_view line)
{
  if (m_eventLog != nullptr) {
    *m_eventLog << formatMilliseconds(m_sim.now()) << ' ' << m_nodes.at(node)->name << ' '
                << line << '\n';
  }
}

} // namespace ntsim::sim
