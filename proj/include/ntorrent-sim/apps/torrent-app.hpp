/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#ifndef NTSIM_APPS_TORRENT_APP_HPP
#define NTSIM_APPS_TORRENT_APP_HPP

#include "ntorrent-sim/fw/metrics.hpp"
#include "ntorrent-sim/torrent/torrent-model.hpp"

#include <functional>
#include <map>
#include <string_view>
#include <variant>

namespace ntsim::apps {

using ndn::Data;
using ndn::Interest;
using ndn::Nack;
using ndn::Name;

/// What an application may ask of the node it runs on.
class AppHost
{
public:
  virtual
  ~AppHost() = default;

  virtual Time
  now() const = 0;

  /// Hands an Interest to the node's forwarder through the app face.
  virtual void
  expressInterest(const Interest& interest) = 0;

  virtual void
  putData(const Data& data) = 0;

  virtual void
  putNack(const Nack& nack) = 0;

  virtual void
  scheduleAfter(Time delay, std::function<void()> callback) = 0;

  virtual uint32_t
  generateNonce() = 0;

  /// Routing announcement: this node can now serve @p name.
  virtual void
  announce(const Name& name) = 0;

  virtual void
  onCompleted() = 0;

  virtual void
  onFailed(const std::string& reason) = 0;

  /// Verbose-mode output.
  virtual void
  log(std::string_view line) = 0;
};

enum class AppRole {
  Seeder,
  Consumer,
};

std::string_view
toString(AppRole role);

/**
 * @brief Common part of the seeder and the peers: a name-addressed object
 *        store that answers Interests.
 */
class TorrentApp
{
public:
  explicit
  TorrentApp(AppHost& host)
    : m_host(host)
  {
  }

  virtual
  ~TorrentApp() = default;

  virtual AppRole
  getRole() const = 0;

  virtual void
  start() = 0;

  /// OnInterest: answers from the store with Data, or Nack(NoContent).
  void
  onInterest(const Interest& interest);

  virtual void
  onData(const Data&)
  {
  }

  virtual void
  onNack(const Nack&)
  {
  }

  /// The reply onInterest() would send.
  std::variant<Data, Nack>
  respond(const Interest& interest) const;

  /// Digest-aware store lookup.
  const Data*
  findObject(const Name& interestName) const;

  bool
  hasObject(const Name& baseName) const
  {
    return m_store.count(baseName) > 0;
  }

  size_t
  getObjectCount() const
  {
    return m_store.size();
  }

  const fw::Metrics&
  getMetrics() const
  {
    return m_metrics;
  }

  uint64_t
  getServedCount() const
  {
    return m_nServed;
  }

protected:
  void
  storeObject(const Data& data);

protected:
  AppHost& m_host;
  fw::Metrics m_metrics;
  std::map<Name, Data> m_store;
  uint64_t m_nServed = 0;
};

} // namespace ntsim::apps

#endif // NTSIM_APPS_TORRENT_APP_HPP
