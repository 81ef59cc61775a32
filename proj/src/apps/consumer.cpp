/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#include "ntorrent-sim/apps/consumer.hpp"

#include <sstream>

namespace ntsim::apps {

ConsumerApp::ConsumerApp(AppHost& host, torrent::TorrentParams params, ConsumerOptions options)
  : TorrentApp(host)
  , m_params(std::move(params))
  , m_options(options)
{
  m_params.validate();
}

Name
ConsumerApp::copyTorrentFile() const
{
  return torrent::buildTorrent(m_params).firstSegmentName();
}

void
ConsumerApp::start()
{
  m_startTime = m_host.now();
  sendInterest(copyTorrentFile());
}

bool
ConsumerApp::sendInterest(const Name& fullName)
{
  return send(fullName, 1);
}

bool
ConsumerApp::send(const Name& fullName, uint32_t attempt)
{
  if (m_failed || isCompleted()) {
    return false;
  }
  Name base = ndn::stripDigest(fullName);
  if (hasObject(base) || m_outstanding.count(base) > 0) {
    return false;
  }
  if (attempt > m_options.maxAttempts) {
    fail("gave up on " + fullName.toUri() + " after " + std::to_string(m_options.maxAttempts) + " attempts");
    return false;
  }

  Interest interest{fullName, m_host.generateNonce(), m_options.interestLifetime, 0};
  m_outstanding[base] = Outstanding{fullName, interest.nonce, attempt, m_host.now()};
  ++m_metrics.interestsSent;
  m_interestLog.push_back(fullName);
  m_host.expressInterest(interest);
  m_host.scheduleAfter(m_options.retxTimeout, [this, base, attempt] { onTimeout(base, attempt); });
  return true;
}

void
ConsumerApp::onTimeout(const Name& baseName, uint32_t attempt)
{
  auto it = m_outstanding.find(baseName);
  if (it == m_outstanding.end() || it->second.attempt != attempt) {
    return;
  }
  Name fullName = it->second.fullName;
  m_outstanding.erase(it);
  ++m_metrics.interestsTimedOut;
  send(fullName, attempt + 1);
}

void
ConsumerApp::retryLater(const Name& fullName, uint32_t attempt)
{
  m_host.scheduleAfter(m_options.retxTimeout, [this, fullName, attempt] { send(fullName, attempt + 1); });
}

void
ConsumerApp::onNack(const Nack& nack)
{
  auto it = m_outstanding.find(ndn::stripDigest(nack.name));
  if (it == m_outstanding.end() || it->second.nonce != nack.nonce) {
    return;
  }
  Outstanding record = it->second;
  m_outstanding.erase(it);
  ++m_metrics.interestsNacked;
  if (record.attempt >= m_options.maxAttempts) {
    fail("Nack(" + std::string(ndn::toString(nack.reason)) + ") for " + record.fullName.toUri() +
         " with no attempts left");
    return;
  }
  retryLater(record.fullName, record.attempt);
}

void
ConsumerApp::onData(const Data& data)
{
  auto it = m_outstanding.find(data.getName());
  if (it == m_outstanding.end()) {
    return;
  }
  Outstanding record = it->second;
  auto wanted = ndn::getDigest(record.fullName);
  if (!data.verify() || (wanted && *wanted != data.getDigest())) {
    ++m_nCorrupt;
    m_outstanding.erase(it);
    send(record.fullName, record.attempt + 1);
    return;
  }

  m_outstanding.erase(it);
  ++m_metrics.interestsSatisfied;
  m_metrics.recordDelay(m_host.now() - record.sentAt);
  storeObject(data);

  switch (torrent::classifyName(data.getName())) {
  case torrent::NameClass::TorrentSegment:
    handleSegment(data);
    break;
  case torrent::NameClass::FileManifest:
    handleManifest(data);
    break;
  case torrent::NameClass::DataPacket:
    handlePacket(data);
    break;
  case torrent::NameClass::Unknown:
    break;
  }

  m_host.announce(data.getName());

  if (!isCompleted() && m_havePackets.size() == m_params.packetCount()) {
    m_finishTime = m_host.now();
    m_host.onCompleted();
  }
}

void
ConsumerApp::handleSegment(const Data& data)
{
  m_haveSegments.push_back(data);
  auto segment = torrent::decodeSegment(data.getContent());
  m_catalogedManifests.insert(segment.manifestCatalog.begin(), segment.manifestCatalog.end());
  if (segment.nextSegment) {
    sendInterest(*segment.nextSegment);
  }

  if (!m_options.strictPhaseBarrier) {
    for (const auto& name : segment.manifestCatalog) {
      sendInterest(name);
    }
    return;
  }
  m_deferredManifests.insert(m_deferredManifests.end(),
                             segment.manifestCatalog.begin(), segment.manifestCatalog.end());
  if (m_haveSegments.size() == m_params.segmentCount()) {
    auto deferred = std::move(m_deferredManifests);
    m_deferredManifests.clear();
    for (const auto& name : deferred) {
      sendInterest(name);
    }
  }
}

void
ConsumerApp::handleManifest(const Data& data)
{
  m_haveManifests.push_back(data);
  auto manifest = torrent::decodeManifest(data.getContent());
  // a successor is only requested once a held segment lists it
  if (manifest.nextManifest && m_catalogedManifests.count(*manifest.nextManifest) > 0 &&
      (!m_options.strictPhaseBarrier || m_haveSegments.size() == m_params.segmentCount())) {
    sendInterest(*manifest.nextManifest);
  }
  for (const auto& name : manifest.packetCatalog) {
    sendInterest(name);
  }
}

void
ConsumerApp::handlePacket(const Data& data)
{
  m_havePackets.push_back(data);
  std::ostringstream os;
  os << "packet " << data.getName() << " (" << data.getContent().size() << " bytes): "
     << std::string(data.getContent().begin(), data.getContent().end());
  m_host.log(os.str());
}

void
ConsumerApp::fail(const std::string& reason)
{
  if (m_failed) {
    return;
  }
  m_failed = true;
  m_host.onFailed(reason);
}

} // namespace ntsim::apps
