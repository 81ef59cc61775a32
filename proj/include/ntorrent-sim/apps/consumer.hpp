/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#ifndef NTSIM_APPS_CONSUMER_HPP
#define NTSIM_APPS_CONSUMER_HPP

#include "ntorrent-sim/apps/torrent-app.hpp"

#include <optional>
#include <set>
#include <vector>

namespace ntsim::apps {

struct ConsumerOptions
{
  /// application retransmission timer
  Time retxTimeout = milliseconds(1000);
  /// attempts per name, first send included
  uint32_t maxAttempts = 5;
  milliseconds interestLifetime = ndn::DEFAULT_INTEREST_LIFETIME;
  /// hold manifest interests until every torrent-file segment is in
  bool strictPhaseBarrier = false;
};

/**
 * @brief Leecher that becomes a peer.
 *
 * Fetches the torrent-file segments, then the manifests they list, then the
 * packets the manifests list, each as soon as the object naming it arrives.
 * Every object received is stored, announced, and served to other peers.
 */
class ConsumerApp : public TorrentApp
{
public:
  struct Outstanding
  {
    Name fullName;
    uint32_t nonce = 0;
    uint32_t attempt = 1;
    Time sentAt{0};
  };

  ConsumerApp(AppHost& host, torrent::TorrentParams params, ConsumerOptions options = {});

  AppRole
  getRole() const override
  {
    return AppRole::Consumer;
  }

  /// copyTorrentFile, then an Interest for the first torrent-file segment.
  void
  start() override;

  /// SendInterest with a fresh nonce. Names already held or outstanding are
  /// suppressed.
  /// @return whether an Interest went out
  bool
  sendInterest(const Name& fullName);

  void
  onData(const Data& data) override;

  void
  onNack(const Nack& nack) override;

  /// Local regeneration of the torrent file; returns the first segment's full name.
  Name
  copyTorrentFile() const;

  bool
  isCompleted() const
  {
    return m_finishTime.has_value();
  }

  bool
  hasFailed() const
  {
    return m_failed;
  }

  std::optional<Time>
  getStartTime() const
  {
    return m_startTime;
  }

  std::optional<Time>
  getFinishTime() const
  {
    return m_finishTime;
  }

  const std::vector<Data>&
  getSegments() const
  {
    return m_haveSegments;
  }

  const std::vector<Data>&
  getManifests() const
  {
    return m_haveManifests;
  }

  const std::vector<Data>&
  getPackets() const
  {
    return m_havePackets;
  }

  const std::map<Name, Outstanding>&
  getOutstanding() const
  {
    return m_outstanding;
  }

  /// Names of every Interest sent, in order, retransmissions included.
  const std::vector<Name>&
  getInterestLog() const
  {
    return m_interestLog;
  }

  uint64_t
  getCorruptCount() const
  {
    return m_nCorrupt;
  }

  const torrent::TorrentParams&
  getParams() const
  {
    return m_params;
  }

private:
  bool
  send(const Name& fullName, uint32_t attempt);

  void
  onTimeout(const Name& baseName, uint32_t attempt);

  void
  retryLater(const Name& fullName, uint32_t attempt);

  void
  handleSegment(const Data& data);

  void
  handleManifest(const Data& data);

  void
  handlePacket(const Data& data);

  void
  fail(const std::string& reason);

private:
  torrent::TorrentParams m_params;
  ConsumerOptions m_options;
  std::vector<Data> m_haveSegments;
  std::vector<Data> m_haveManifests;
  std::vector<Data> m_havePackets;
  std::map<Name, Outstanding> m_outstanding;
  std::vector<Name> m_deferredManifests;
  std::set<Name> m_catalogedManifests;
  std::vector<Name> m_interestLog;
  std::optional<Time> m_startTime;
  std::optional<Time> m_finishTime;
  uint64_t m_nCorrupt = 0;
  bool m_failed = false;
};

} // namespace ntsim::apps

#endif // NTSIM_APPS_CONSUMER_HPP
