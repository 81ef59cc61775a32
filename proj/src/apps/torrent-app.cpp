/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#include "ntorrent-sim/apps/torrent-app.hpp"

namespace ntsim::apps {

std::string_view
toString(AppRole role)
{
  return role == AppRole::Seeder ? "seeder" : "consumer";
}

void
TorrentApp::onInterest(const Interest& interest)
{
  auto reply = respond(interest);
  if (auto* data = std::get_if<Data>(&reply)) {
    ++m_nServed;
    m_host.putData(*data);
  }
  else {
    m_host.putNack(std::get<Nack>(reply));
  }
}

std::variant<Data, Nack>
TorrentApp::respond(const Interest& interest) const
{
  if (torrent::classifyName(interest.name) != torrent::NameClass::Unknown) {
    if (const Data* data = findObject(interest.name)) {
      Data reply = *data;
      reply.tags = {};
      return reply;
    }
  }
  return Nack{interest.name, interest.nonce, ndn::NackReason::NoContent};
}

const Data*
TorrentApp::findObject(const Name& interestName) const
{
  auto it = m_store.find(interestName);
  if (it != m_store.end()) {
    return &it->second;
  }
  auto digest = ndn::getDigest(interestName);
  if (!digest) {
    return nullptr;
  }
  it = m_store.find(interestName.getPrefix(-1));
  if (it == m_store.end() || it->second.getDigest() != *digest) {
    return nullptr;
  }
  return &it->second;
}

void
TorrentApp::storeObject(const Data& data)
{
  m_store.emplace(data.getName(), data);
}

} // namespace ntsim::apps
