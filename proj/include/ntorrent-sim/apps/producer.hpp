/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#ifndef NTSIM_APPS_PRODUCER_HPP
#define NTSIM_APPS_PRODUCER_HPP

#include "ntorrent-sim/apps/torrent-app.hpp"

namespace ntsim::apps {

/// The seeder: holds the whole bundle from the start and announces the torrent prefix.
class ProducerApp : public TorrentApp
{
public:
  ProducerApp(AppHost& host, torrent::TorrentBundle bundle);

  AppRole
  getRole() const override
  {
    return AppRole::Seeder;
  }

  void
  start() override;

  const torrent::TorrentBundle&
  getBundle() const
  {
    return m_bundle;
  }

private:
  torrent::TorrentBundle m_bundle;
};

} // namespace ntsim::apps

#endif // NTSIM_APPS_PRODUCER_HPP
