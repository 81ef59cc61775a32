/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#include "ntorrent-sim/fw/forwarder.hpp"

#include <algorithm>
#include <set>

namespace ntsim::fw {

Forwarder::Forwarder(NodeId node, ForwarderOptions options)
  : m_node(node)
  , m_options(options)
  , m_cs(options.csEnabled ? options.csCapacity : 0)
{
}

void
Forwarder::addFace(const Face& face)
{
  m_faces[face.id] = face;
}

const Face*
Forwarder::getFace(FaceId id) const
{
  auto it = m_faces.find(id);
  return it == m_faces.end() ? nullptr : &it->second;
}

void
Forwarder::setStrategy(std::unique_ptr<Strategy> strategy)
{
  m_strategy = std::move(strategy);
}

bool
Forwarder::isApplicationFace(FaceId face) const
{
  const Face* f = getFace(face);
  return f != nullptr && f->isApplication();
}

void
Forwarder::armExpiry(Time at)
{
  if (m_armTimer) {
    m_armTimer(at);
  }
}

std::vector<Emission>
Forwarder::onIncomingInterest(FaceId inFace, ndn::Interest interest, Time now)
{
  ++m_counters.nInInterests;
  std::vector<Emission> out;
  if (!isApplicationFace(inFace)) {
    ++interest.hopCount;
  }

  PitEntry* entry = m_pit.find(interest.name);
  if (entry != nullptr && entry->nonces.count(interest.nonce) > 0) {
    ++m_counters.nDuplicateNonces;
    out.push_back({inFace, ndn::Nack{interest.name, interest.nonce, ndn::NackReason::Duplicate}});
    return out;
  }

  if (m_options.csEnabled) {
    if (const ndn::Data* cached = m_cs.find(interest.name)) {
      ++m_counters.nCsHits;
      out.push_back({inFace, *cached});
      return out;
    }
    ++m_counters.nCsMisses;
  }

  Time expiry = now + Time(interest.lifetime);
  if (entry != nullptr) {
    bool isRetransmission = entry->hasInFace(inFace);
    if (!isRetransmission && entry->outFaces.count(inFace) > 0 &&
        entry->nackedFaces.count(inFace) == 0) {
      // the upstream we are waiting on asks us for the same name; aggregating
      // would leave both entries waiting on each other
      ++m_counters.nLoopNacks;
      out.push_back({inFace, ndn::Nack{interest.name, interest.nonce, ndn::NackReason::Duplicate}});
      return out;
    }
    entry->nonces.insert(interest.nonce);
    entry->inRecords[inFace] = InRecord{interest.nonce, now, expiry};
    entry->updateExpiry();
    armExpiry(entry->expiry);
    if (!isRetransmission) {
      ++m_counters.nAggregated;
      return out;
    }
    // same downstream asked again with a fresh nonce: forward anew
    entry->interest.nonce = interest.nonce;
    entry->interest.hopCount = interest.hopCount;
    entry->outFaces.clear();
    entry->nackedFaces.clear();
    forwardInterest(*entry, inFace, now, out);
    return out;
  }

  auto [created, isNew] = m_pit.insert(interest);
  created->nonces.insert(interest.nonce);
  created->inRecords[inFace] = InRecord{interest.nonce, now, expiry};
  created->updateExpiry();
  armExpiry(created->expiry);
  forwardInterest(*created, inFace, now, out);
  return out;
}

void
Forwarder::forwardInterest(PitEntry& entry, FaceId inFace, Time now, std::vector<Emission>& out)
{
  const FibEntry* fibEntry = m_fib.findLongestPrefixMatch(entry.name);
  std::vector<FaceId> ranked;
  if (fibEntry != nullptr && m_strategy != nullptr) {
    ranked = m_strategy->afterReceiveInterest(entry.interest, inFace, entry, *fibEntry, now);
  }

  if (ranked.empty()) {
    ++m_counters.nNoRoute;
    for (const auto& [face, record] : entry.inRecords) {
      out.push_back({face, ndn::Nack{entry.name, record.nonce, ndn::NackReason::NoRoute}});
    }
    m_pit.erase(entry.name);
    return;
  }

  FaceId outFace = ranked.front();
  entry.outFaces.insert(outFace);
  out.push_back({outFace, entry.interest});
}

std::vector<Emission>
Forwarder::onIncomingData(FaceId inFace, const ndn::Data& data, Time now)
{
  ++m_counters.nInData;
  std::vector<Emission> out;

  auto matches = m_pit.findAllDataMatches(data);
  if (matches.empty()) {
    ++m_counters.nUnsolicitedData;
    return out;
  }

  // a node does not cache what only its own applications asked for;
  // those applications keep the objects and answer for them
  bool hasLinkDownstream = false;
  std::set<FaceId> downstreams;
  for (PitEntry* entry : matches) {
    for (const auto& [face, record] : entry->inRecords) {
      if (face == inFace) {
        continue;
      }
      downstreams.insert(face);
      hasLinkDownstream = hasLinkDownstream || !isApplicationFace(face);
    }
  }
  if (m_options.csEnabled && hasLinkDownstream) {
    m_cs.insert(data);
  }

  std::vector<ndn::Name> satisfied;
  for (PitEntry* entry : matches) {
    if (m_strategy != nullptr) {
      m_strategy->beforeSatisfyInterest(*entry, inFace, data, now);
      ++m_counters.nBeforeSatisfyCallbacks;
    }
    ++m_counters.nSatisfiedEntries;
    satisfied.push_back(entry->name);
  }
  for (const auto& name : satisfied) {
    m_pit.erase(name);
  }

  for (FaceId face : downstreams) {
    out.push_back({face, data});
  }
  return out;
}

std::vector<Emission>
Forwarder::onIncomingNack(FaceId inFace, const ndn::Nack& nack, Time now)
{
  ++m_counters.nInNacks;
  std::vector<Emission> out;

  PitEntry* entry = m_pit.find(nack.name);
  if (entry == nullptr || entry->outFaces.count(inFace) == 0 || entry->interest.nonce != nack.nonce) {
    ++m_counters.nStaleNacks;
    return out;
  }
  entry->nackedFaces.insert(inFace);

  std::optional<FaceId> retry;
  if (m_strategy != nullptr) {
    retry = m_strategy->afterReceiveNack(nack, inFace, *entry, m_fib.findLongestPrefixMatch(entry->name), now);
  }
  if (retry && !entry->hasInFace(*retry) && entry->outFaces.count(*retry) == 0) {
    ++m_counters.nNackRetries;
    entry->outFaces.insert(*retry);
    out.push_back({*retry, entry->interest});
    return out;
  }

  for (const auto& [face, record] : entry->inRecords) {
    out.push_back({face, ndn::Nack{entry->name, record.nonce, nack.reason}});
  }
  m_pit.erase(entry->name);
  return out;
}

void
Forwarder::expirePendingInterests(Time now)
{
  m_counters.nExpiredEntries += m_pit.expire(now).size();
}

} // namespace ntsim::fw
