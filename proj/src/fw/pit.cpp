/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#include "ntorrent-sim/fw/pit.hpp"

namespace ntsim::fw {

PitEntry*
Pit::find(const ndn::Name& name)
{
  auto it = m_entries.find(name);
  return it == m_entries.end() ? nullptr : &it->second;
}

const PitEntry*
Pit::find(const ndn::Name& name) const
{
  auto it = m_entries.find(name);
  return it == m_entries.end() ? nullptr : &it->second;
}

std::pair<PitEntry*, bool>
Pit::insert(const ndn::Interest& interest)
{
  auto [it, isNew] = m_entries.try_emplace(interest.name);
  if (isNew) {
    it->second.name = interest.name;
    it->second.interest = interest;
  }
  return {&it->second, isNew};
}

void
Pit::erase(const ndn::Name& name)
{
  m_entries.erase(name);
}

std::vector<PitEntry*>
Pit::findAllDataMatches(const ndn::Data& data)
{
  std::vector<PitEntry*> matches;
  if (auto* exact = find(data.getName())) {
    matches.push_back(exact);
  }
  if (auto* full = find(data.getFullName())) {
    matches.push_back(full);
  }
  return matches;
}

std::vector<ndn::Name>
Pit::expire(Time now)
{
  std::vector<ndn::Name> removed;
  for (auto it = m_entries.begin(); it != m_entries.end();) {
    if (it->second.expiry <= now) {
      removed.push_back(it->first);
      it = m_entries.erase(it);
    }
    else {
      ++it;
    }
  }
  return removed;
}

} // namespace ntsim::fw
