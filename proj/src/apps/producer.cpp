/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#include "ntorrent-sim/apps/producer.hpp"

namespace ntsim::apps {

ProducerApp::ProducerApp(AppHost& host, torrent::TorrentBundle bundle)
  : TorrentApp(host)
  , m_bundle(std::move(bundle))
{
  for (const auto& data : m_bundle.allObjects()) {
    storeObject(data);
  }
}

void
ProducerApp::start()
{
  m_host.announce(torrent::torrentPrefix(m_bundle.params.torrentName));
}

} // namespace ntsim::apps
