/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#include "ntorrent-sim/fw/content-store.hpp"

#include <algorithm>

namespace ntsim::fw {

ContentStore::ContentStore(size_t capacity)
  : m_capacity(capacity)
{
}

void
ContentStore::insert(const ndn::Data& data)
{
  if (m_capacity == 0) {
    return;
  }
  auto it = m_entries.find(data.getName());
  if (it != m_entries.end()) {
    it->second = data;
    return;
  }
  m_entries.emplace(data.getName(), data);
  m_order.push_back(data.getName());
  evictOverflow();
}

const ndn::Data*
ContentStore::find(const ndn::Name& interestName) const
{
  auto it = m_entries.find(interestName);
  if (it != m_entries.end()) {
    return it->second.verify() ? &it->second : nullptr;
  }

  auto digest = ndn::getDigest(interestName);
  if (!digest) {
    return nullptr;
  }
  it = m_entries.find(interestName.getPrefix(-1));
  if (it == m_entries.end() || it->second.getDigest() != *digest || !it->second.verify()) {
    return nullptr;
  }
  return &it->second;
}

void
ContentStore::setCapacity(size_t capacity)
{
  m_capacity = capacity;
  evictOverflow();
}

void
ContentStore::evictOverflow()
{
  while (m_entries.size() > m_capacity) {
    m_entries.erase(m_order.front());
    m_order.pop_front();
  }
}

} // namespace ntsim::fw
