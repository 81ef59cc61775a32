/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#include "ntorrent-sim/fw/client-control-strategy.hpp"
#include "ntorrent-sim/fw/forwarder.hpp"
#include "ntorrent-sim/fw/ntorrent-strategy.hpp"

#include "common/print.hpp"

#include <boost/test/unit_test.hpp>

namespace ntsim::fw::tests {

using ndn::Data;
using ndn::Interest;
using ndn::Nack;
using ndn::NackReason;
using ndn::Name;

namespace {

Data
makeData(const Name& name, char fill = 'A')
{
  return Data(name, Buffer(64, static_cast<uint8_t>(fill)), "SIG:test");
}

template<typename T>
const T*
as(const Emission& e)
{
  return std::get_if<T>(&e.packet);
}

class ForwarderFixture
{
public:
  ForwarderFixture()
    : fw(0)
  {
    fw.addFace({APP, FaceKind::Application, 0, INVALID_NODE, 1});
    fw.addFace({L1, FaceKind::Link, 0, 1, 0});
    fw.addFace({L2, FaceKind::Link, 1, 2, 0});
    fw.addFace({L3, FaceKind::Link, 2, 3, 0});
    fw.setStrategy(std::make_unique<ClientControlStrategy>());
  }

public:
  static constexpr FaceId APP = 1;
  static constexpr FaceId L1 = 256;
  static constexpr FaceId L2 = 257;
  static constexpr FaceId L3 = 258;
  Forwarder fw;
  Time t0 = milliseconds(1000);
};

} // namespace

BOOST_AUTO_TEST_SUITE(Fw)

BOOST_AUTO_TEST_SUITE(TestContentStore)

BOOST_AUTO_TEST_CASE(ExactAndDigestLookup)
{
  ContentStore cs;
  Data d = makeData(Name{"x"});
  cs.insert(d);
  BOOST_TEST(cs.find(Name{"x"}) != nullptr);
  BOOST_TEST(cs.find(d.getFullName()) != nullptr);
  BOOST_TEST(cs.find(ndn::appendDigest(Name{"x"}, ndn::sha256(std::string_view("other")))) == nullptr);
  BOOST_TEST(cs.find(Name{"y"}) == nullptr);
  BOOST_TEST(cs.find(Name{"x", "z"}) == nullptr);
}

BOOST_AUTO_TEST_CASE(FifoEviction)
{
  ContentStore cs(2);
  cs.insert(makeData(Name{"a"}));
  cs.insert(makeData(Name{"b"}));
  cs.insert(makeData(Name{"c"}));
  BOOST_TEST(cs.size() == 2);
  BOOST_TEST(cs.find(Name{"a"}) == nullptr);
  BOOST_TEST(cs.find(Name{"b"}) != nullptr);
  BOOST_TEST(cs.find(Name{"c"}) != nullptr);
  cs.setCapacity(1);
  BOOST_TEST(cs.size() == 1);
  BOOST_TEST(cs.find(Name{"c"}) != nullptr);
}

BOOST_AUTO_TEST_CASE(ReinsertDoesNotGrow)
{
  ContentStore cs(3);
  cs.insert(makeData(Name{"a"}));
  cs.insert(makeData(Name{"a"}));
  BOOST_TEST(cs.size() == 1);
  BOOST_TEST(cs.names().size() == 1);
}

BOOST_AUTO_TEST_CASE(CorruptEntryNeverReturned)
{
  ContentStore cs;
  Data d = makeData(Name{"x"});
  d.corruptContent(Buffer(64, 'B'));
  cs.insert(d);
  BOOST_TEST(cs.find(d.getFullName()) == nullptr);
  BOOST_TEST(cs.find(Name{"x"}) == nullptr);
}

BOOST_AUTO_TEST_SUITE_END() // TestContentStore

BOOST_AUTO_TEST_SUITE(TestFib)

BOOST_AUTO_TEST_CASE(LongestPrefixMatch)
{
  Fib fib;
  fib.addOrUpdateNextHop(Name{"a"}, 256, 10);
  fib.addOrUpdateNextHop(Name{"a", "b"}, 257, 10);
  BOOST_TEST(fib.findLongestPrefixMatch(Name{"a", "b", "c"})->prefix == (Name{"a", "b"}));
  BOOST_TEST(fib.findLongestPrefixMatch(Name{"a", "c"})->prefix == (Name{"a"}));
  BOOST_TEST(fib.findLongestPrefixMatch(Name{"b"}) == nullptr);
  BOOST_TEST(fib.findExactMatch(Name{"a", "b", "c"}) == nullptr);
}

BOOST_AUTO_TEST_CASE(UpdateKeepsOneRecordPerFace)
{
  Fib fib;
  fib.addOrUpdateNextHop(Name{"a"}, 256, 30);
  fib.addOrUpdateNextHop(Name{"a"}, 257, 20);
  fib.addOrUpdateNextHop(Name{"a"}, 256, 10);
  const auto& hops = fib.findExactMatch(Name{"a"})->nextHops;
  BOOST_TEST(hops.size() == 2);
  BOOST_TEST(hops[0].face == 256);
  BOOST_TEST(hops[0].cost == 10);
  fib.removeNextHop(Name{"a"}, 256);
  fib.removeNextHop(Name{"a"}, 257);
  BOOST_TEST(fib.findExactMatch(Name{"a"}) == nullptr);
}

BOOST_AUTO_TEST_SUITE_END() // TestFib

BOOST_AUTO_TEST_SUITE(TestPit)

BOOST_AUTO_TEST_CASE(InsertFindExpire)
{
  Pit pit;
  auto [e, isNew] = pit.insert(Interest{Name{"a"}, 1});
  BOOST_TEST(isNew);
  e->inRecords[256] = InRecord{1, Time{0}, milliseconds(10)};
  e->updateExpiry();
  BOOST_TEST(!pit.insert(Interest{Name{"a"}, 2}).second);
  BOOST_TEST(pit.expire(milliseconds(9)).empty());
  BOOST_TEST(pit.expire(milliseconds(10)).size() == 1);
  BOOST_TEST(pit.size() == 0);
}

BOOST_AUTO_TEST_CASE(DataMatchesBaseAndFullName)
{
  Pit pit;
  Data d = makeData(Name{"x"});
  pit.insert(Interest{Name{"x"}, 1});
  pit.insert(Interest{d.getFullName(), 2});
  pit.insert(Interest{ndn::appendDigest(Name{"x"}, ndn::sha256(std::string_view("no"))), 3});
  BOOST_TEST(pit.findAllDataMatches(d).size() == 2);
}

BOOST_AUTO_TEST_SUITE_END() // TestPit

BOOST_FIXTURE_TEST_SUITE(TestForwarder, ForwarderFixture)

BOOST_AUTO_TEST_CASE(CsHitShortCircuits)
{
  Data d = makeData(Name{"x"});
  fw.getCs().insert(d);
  auto out = fw.onIncomingInterest(L1, Interest{d.getFullName(), 5}, t0);
  BOOST_TEST_REQUIRE(out.size() == 1);
  BOOST_TEST(out[0].face == L1);
  BOOST_TEST(as<Data>(out[0]) != nullptr);
  BOOST_TEST(fw.getPit().size() == 0);
}

BOOST_AUTO_TEST_CASE(NoRouteNack)
{
  auto out = fw.onIncomingInterest(L1, Interest{Name{"x"}, 5}, t0);
  BOOST_TEST_REQUIRE(out.size() == 1);
  BOOST_TEST(out[0].face == L1);
  BOOST_TEST(as<Nack>(out[0])->reason == NackReason::NoRoute);
  BOOST_TEST(as<Nack>(out[0])->nonce == 5);
  BOOST_TEST(fw.getPit().size() == 0);
}

BOOST_AUTO_TEST_CASE(OnlyHopIsInFace)
{
  fw.getFib().addOrUpdateNextHop(Name{"x"}, L1, 1);
  auto out = fw.onIncomingInterest(L1, Interest{Name{"x"}, 5}, t0);
  BOOST_TEST_REQUIRE(out.size() == 1);
  BOOST_TEST(as<Nack>(out[0])->reason == NackReason::NoRoute);
}

BOOST_AUTO_TEST_CASE(AggregationAndFanOut)
{
  fw.getFib().addOrUpdateNextHop(Name{"x"}, L3, 1);
  Data d = makeData(Name{"x"});
  auto out1 = fw.onIncomingInterest(L1, Interest{d.getFullName(), 1}, t0);
  auto out2 = fw.onIncomingInterest(L2, Interest{d.getFullName(), 2}, t0);
  BOOST_TEST_REQUIRE(out1.size() == 1);
  BOOST_TEST(out1[0].face == L3);
  BOOST_TEST(as<Interest>(out1[0])->hopCount == 1);
  BOOST_TEST(out2.empty());
  const PitEntry* entry = fw.getPit().find(d.getFullName());
  BOOST_TEST_REQUIRE(entry != nullptr);
  BOOST_TEST(entry->inRecords.size() == 2);
  BOOST_TEST(fw.getCounters().nAggregated == 1);

  auto out3 = fw.onIncomingData(L3, d, t0 + milliseconds(5));
  BOOST_TEST(out3.size() == 2);
  BOOST_TEST(out3[0].face == L1);
  BOOST_TEST(out3[1].face == L2);
  BOOST_TEST(fw.getPit().size() == 0);
  BOOST_TEST(fw.getCs().find(d.getFullName()) != nullptr);
  BOOST_TEST(fw.getCounters().nBeforeSatisfyCallbacks == 1);
}

BOOST_AUTO_TEST_CASE(DuplicateNonce)
{
  fw.getFib().addOrUpdateNextHop(Name{"x"}, L3, 1);
  fw.onIncomingInterest(L1, Interest{Name{"x"}, 9}, t0);
  auto out = fw.onIncomingInterest(L2, Interest{Name{"x"}, 9}, t0);
  BOOST_TEST_REQUIRE(out.size() == 1);
  BOOST_TEST(out[0].face == L2);
  BOOST_TEST(as<Nack>(out[0])->reason == NackReason::Duplicate);
  BOOST_TEST(!fw.getPit().find(Name{"x"})->hasInFace(L2));
}

BOOST_AUTO_TEST_CASE(RetransmissionIsForwarded)
{
  fw.getFib().addOrUpdateNextHop(Name{"x"}, L3, 1);
  fw.onIncomingInterest(L1, Interest{Name{"x"}, 1}, t0);
  auto out = fw.onIncomingInterest(L1, Interest{Name{"x"}, 2}, t0 + milliseconds(1000));
  BOOST_TEST_REQUIRE(out.size() == 1);
  BOOST_TEST(as<Interest>(out[0])->nonce == 2);
}

BOOST_AUTO_TEST_CASE(InterestFromPendingUpstream)
{
  fw.getFib().addOrUpdateNextHop(Name{"x"}, L3, 1);
  fw.onIncomingInterest(L1, Interest{Name{"x"}, 1}, t0);
  auto out = fw.onIncomingInterest(L3, Interest{Name{"x"}, 2}, t0);
  BOOST_TEST_REQUIRE(out.size() == 1);
  BOOST_TEST(out[0].face == L3);
  BOOST_TEST(as<Nack>(out[0])->reason == NackReason::Duplicate);
  BOOST_TEST(fw.getCounters().nLoopNacks == 1);
}

BOOST_AUTO_TEST_CASE(UnsolicitedDataDropped)
{
  auto out = fw.onIncomingData(L1, makeData(Name{"x"}), t0);
  BOOST_TEST(out.empty());
  BOOST_TEST(fw.getCs().size() == 0);
  BOOST_TEST(fw.getCounters().nUnsolicitedData == 1);
}

BOOST_AUTO_TEST_CASE(WrongDigestDataDropped)
{
  fw.getFib().addOrUpdateNextHop(Name{"x"}, L3, 1);
  Data good = makeData(Name{"x"});
  fw.onIncomingInterest(L1, Interest{good.getFullName(), 1}, t0);
  auto out = fw.onIncomingData(L3, makeData(Name{"x"}, 'B'), t0);
  BOOST_TEST(out.empty());
  BOOST_TEST(fw.getPit().size() == 1);
}

BOOST_AUTO_TEST_CASE(AppOnlyDownstreamNotCached)
{
  fw.getFib().addOrUpdateNextHop(Name{"x"}, L3, 1);
  Data d = makeData(Name{"x"});
  fw.onIncomingInterest(APP, Interest{d.getFullName(), 1}, t0);
  auto out = fw.onIncomingData(L3, d, t0);
  BOOST_TEST_REQUIRE(out.size() == 1);
  BOOST_TEST(out[0].face == APP);
  BOOST_TEST(fw.getCs().size() == 0);
}

BOOST_AUTO_TEST_CASE(NackRetryThenPropagate)
{
  fw.getFib().addOrUpdateNextHop(Name{"x"}, L2, 1);
  fw.getFib().addOrUpdateNextHop(Name{"x"}, L3, 2);
  auto out = fw.onIncomingInterest(L1, Interest{Name{"x"}, 4}, t0);
  BOOST_TEST(out.at(0).face == L2);

  out = fw.onIncomingNack(L2, Nack{Name{"x"}, 4, NackReason::NoRoute}, t0);
  BOOST_TEST_REQUIRE(out.size() == 1);
  BOOST_TEST(out[0].face == L3);
  BOOST_TEST(as<Interest>(out[0])->nonce == 4);

  out = fw.onIncomingNack(L3, Nack{Name{"x"}, 4, NackReason::NoRoute}, t0);
  BOOST_TEST_REQUIRE(out.size() == 1);
  BOOST_TEST(out[0].face == L1);
  BOOST_TEST(as<Nack>(out[0]) != nullptr);
  BOOST_TEST(fw.getPit().size() == 0);
}

BOOST_AUTO_TEST_CASE(StaleNackDropped)
{
  BOOST_TEST(fw.onIncomingNack(L2, Nack{Name{"x"}, 4, NackReason::NoRoute}, t0).empty());
  fw.getFib().addOrUpdateNextHop(Name{"x"}, L2, 1);
  fw.onIncomingInterest(L1, Interest{Name{"x"}, 4}, t0);
  // wrong nonce, wrong face
  BOOST_TEST(fw.onIncomingNack(L2, Nack{Name{"x"}, 5, NackReason::NoRoute}, t0).empty());
  BOOST_TEST(fw.onIncomingNack(L3, Nack{Name{"x"}, 4, NackReason::NoRoute}, t0).empty());
  BOOST_TEST(fw.getCounters().nStaleNacks == 3);
  BOOST_TEST(fw.getPit().size() == 1);
}

BOOST_AUTO_TEST_CASE(ExpiryTimerAndRemoval)
{
  std::vector<Time> armed;
  fw.setExpiryTimerHook([&] (Time at) { armed.push_back(at); });
  fw.getFib().addOrUpdateNextHop(Name{"x"}, L3, 1);
  fw.onIncomingInterest(L1, Interest{Name{"x"}, 1, milliseconds(100)}, t0);
  BOOST_TEST_REQUIRE(armed.size() == 1);
  BOOST_TEST(armed[0] == t0 + milliseconds(100));
  fw.expirePendingInterests(t0 + milliseconds(99));
  BOOST_TEST(fw.getPit().size() == 1);
  fw.expirePendingInterests(t0 + milliseconds(100));
  BOOST_TEST(fw.getPit().size() == 0);
  // late data is now unsolicited
  BOOST_TEST(fw.onIncomingData(L3, makeData(Name{"x"}), t0 + milliseconds(150)).empty());
}

BOOST_AUTO_TEST_CASE(CacheDisabled)
{
  Forwarder noCache(0, ForwarderOptions{ContentStore::UNLIMITED, false});
  noCache.addFace({L1, FaceKind::Link, 0, 1, 0});
  noCache.addFace({L3, FaceKind::Link, 1, 3, 0});
  noCache.setStrategy(std::make_unique<ClientControlStrategy>());
  noCache.getFib().addOrUpdateNextHop(Name{"x"}, L3, 1);
  noCache.onIncomingInterest(L1, Interest{Name{"x"}, 1}, t0);
  noCache.onIncomingData(L3, makeData(Name{"x"}), t0);
  BOOST_TEST(noCache.getCs().size() == 0);
}

BOOST_AUTO_TEST_SUITE_END() // TestForwarder
BOOST_AUTO_TEST_SUITE_END() // Fw

} // namespace ntsim::fw::tests
