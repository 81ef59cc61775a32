/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#ifndef NTSIM_FW_CONTENT_STORE_HPP
#define NTSIM_FW_CONTENT_STORE_HPP

#include "ntorrent-sim/ndn/packet.hpp"

#include <deque>
#include <limits>
#include <map>

namespace ntsim::fw {

/**
 * Exact-match Data cache with FIFO eviction.
 *
 * Entries are keyed by Data name. A lookup for a name ending in a digest
 * component matches the stored Data only if its digest is the requested one.
 */
class ContentStore
{
public:
  static constexpr size_t UNLIMITED = std::numeric_limits<size_t>::max();

  explicit
  ContentStore(size_t capacity = UNLIMITED);

  /// Inserts or refreshes @p data; evicts the oldest entry when full.
  void
  insert(const ndn::Data& data);

  /// @return the stored Data, or nullptr
  const ndn::Data*
  find(const ndn::Name& interestName) const;

  size_t
  size() const
  {
    return m_entries.size();
  }

  size_t
  getCapacity() const
  {
    return m_capacity;
  }

  void
  setCapacity(size_t capacity);

  /// Names in insertion order.
  std::vector<ndn::Name>
  names() const
  {
    return {m_order.begin(), m_order.end()};
  }

private:
  void
  evictOverflow();

private:
  size_t m_capacity;
  std::map<ndn::Name, ndn::Data> m_entries;
  std::deque<ndn::Name> m_order;
};

} // namespace ntsim::fw

#endif // NTSIM_FW_CONTENT_STORE_HPP
