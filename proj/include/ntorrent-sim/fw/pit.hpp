/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#ifndef NTSIM_FW_PIT_HPP
#define NTSIM_FW_PIT_HPP

#include "ntorrent-sim/ndn/packet.hpp"

#include <map>
#include <set>
#include <vector>

namespace ntsim::fw {

struct InRecord
{
  uint32_t nonce = 0;
  Time arrival{0};
  Time expiry{0};
};

struct PitEntry
{
  ndn::Name name;
  /// interest as last forwarded upstream
  ndn::Interest interest;
  std::set<uint32_t> nonces;
  std::map<FaceId, InRecord> inRecords;
  std::set<FaceId> outFaces;
  /// upstream faces that returned a Nack for this entry
  std::set<FaceId> nackedFaces;
  Time expiry{0};

  bool
  hasInFace(FaceId face) const
  {
    return inRecords.count(face) > 0;
  }

  void
  updateExpiry()
  {
    expiry = Time{0};
    for (const auto& [face, record] : inRecords) {
      expiry = std::max(expiry, record.expiry);
    }
  }
};

class Pit
{
public:
  PitEntry*
  find(const ndn::Name& name);

  const PitEntry*
  find(const ndn::Name& name) const;

  /// @return the entry and whether it was newly created
  std::pair<PitEntry*, bool>
  insert(const ndn::Interest& interest);

  void
  erase(const ndn::Name& name);

  /// Entries a Data packet satisfies: its exact name and its full name.
  std::vector<PitEntry*>
  findAllDataMatches(const ndn::Data& data);

  /// Removes entries whose expiry is at or before @p now.
  /// @return names of the removed entries
  std::vector<ndn::Name>
  expire(Time now);

  size_t
  size() const
  {
    return m_entries.size();
  }

  const std::map<ndn::Name, PitEntry>&
  entries() const
  {
    return m_entries;
  }

private:
  std::map<ndn::Name, PitEntry> m_entries;
};

} // namespace ntsim::fw

#endif // NTSIM_FW_PIT_HPP
