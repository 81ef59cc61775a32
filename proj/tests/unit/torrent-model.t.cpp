/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#include "ntorrent-sim/torrent/torrent-model.hpp"

#include "common/print.hpp"

#include <boost/test/unit_test.hpp>

#include <set>

namespace ntsim::torrent::tests {

namespace {

// produced by tests/oracles/torrent_oracle.py (default parameters)
const std::vector<std::string> DEFAULT_FULL_NAMES{
  "/NTORRENT/demo/torrent-file/seg=0/sha256digest=3033ca800c5130ac91af6bc7fbd84019490f2d099b9a57115f64bebcdcf6b170",
  "/NTORRENT/demo/torrent-file/seg=1/sha256digest=a1c9fbfb63da447b5c71380a869d4b9308a31bb4b7db1c2aec55ce1d28a4c44f",
  "/NTORRENT/demo/file0/data/pkt=0/sha256digest=d53eda7a637c99cc7fb566d96e9fa109bf15c478410a3f5eb4d4c4e26cd081f6",
  "/NTORRENT/demo/file0/data/pkt=1/sha256digest=d53eda7a637c99cc7fb566d96e9fa109bf15c478410a3f5eb4d4c4e26cd081f6",
  "/NTORRENT/demo/file0/data/pkt=2/sha256digest=d53eda7a637c99cc7fb566d96e9fa109bf15c478410a3f5eb4d4c4e26cd081f6",
  "/NTORRENT/demo/file0/data/pkt=3/sha256digest=d53eda7a637c99cc7fb566d96e9fa109bf15c478410a3f5eb4d4c4e26cd081f6",
  "/NTORRENT/demo/file0/data/pkt=4/sha256digest=d53eda7a637c99cc7fb566d96e9fa109bf15c478410a3f5eb4d4c4e26cd081f6",
  "/NTORRENT/demo/file0/data/pkt=5/sha256digest=d53eda7a637c99cc7fb566d96e9fa109bf15c478410a3f5eb4d4c4e26cd081f6",
  "/NTORRENT/demo/file0/data/pkt=6/sha256digest=d53eda7a637c99cc7fb566d96e9fa109bf15c478410a3f5eb4d4c4e26cd081f6",
  "/NTORRENT/demo/file0/data/pkt=7/sha256digest=d53eda7a637c99cc7fb566d96e9fa109bf15c478410a3f5eb4d4c4e26cd081f6",
  "/NTORRENT/demo/file1/data/pkt=0/sha256digest=d53eda7a637c99cc7fb566d96e9fa109bf15c478410a3f5eb4d4c4e26cd081f6",
  "/NTORRENT/demo/file1/data/pkt=1/sha256digest=d53eda7a637c99cc7fb566d96e9fa109bf15c478410a3f5eb4d4c4e26cd081f6",
  "/NTORRENT/demo/file1/data/pkt=2/sha256digest=d53eda7a637c99cc7fb566d96e9fa109bf15c478410a3f5eb4d4c4e26cd081f6",
  "/NTORRENT/demo/file1/data/pkt=3/sha256digest=d53eda7a637c99cc7fb566d96e9fa109bf15c478410a3f5eb4d4c4e26cd081f6",
  "/NTORRENT/demo/file1/data/pkt=4/sha256digest=d53eda7a637c99cc7fb566d96e9fa109bf15c478410a3f5eb4d4c4e26cd081f6",
  "/NTORRENT/demo/file1/data/pkt=5/sha256digest=d53eda7a637c99cc7fb566d96e9fa109bf15c478410a3f5eb4d4c4e26cd081f6",
  "/NTORRENT/demo/file1/data/pkt=6/sha256digest=d53eda7a637c99cc7fb566d96e9fa109bf15c478410a3f5eb4d4c4e26cd081f6",
  "/NTORRENT/demo/file1/data/pkt=7/sha256digest=d53eda7a637c99cc7fb566d96e9fa109bf15c478410a3f5eb4d4c4e26cd081f6",
  "/NTORRENT/demo/file0/manifest/seg=0/sha256digest=ca9d5edc53b96b4dee142b637616c0a09498cc9863aab7df3d509bb08f5e2242",
  "/NTORRENT/demo/file0/manifest/seg=1/sha256digest=db790f9fffe2490b1034e3d0d4a47aedb65e648e218b026615440a27af4b0d7d",
  "/NTORRENT/demo/file1/manifest/seg=0/sha256digest=c0a7dce2e91f95ec4526ae9be76d3c56dc646b4491257e688a65e17181efc76b",
  "/NTORRENT/demo/file1/manifest/seg=1/sha256digest=fb0b164148e4885e5fc741e59295c82de652cfd6d812f3971bb9f6944dc1f12a",
};

// torrent_oracle.py 1 100 64 1 1
const std::vector<std::string> SMALL_FULL_NAMES{
  "/NTORRENT/demo/torrent-file/seg=0/sha256digest=e665fb0412b39ba5c1f310afce196d58673e243078e195b8ee78e0cc6a61c453",
  "/NTORRENT/demo/torrent-file/seg=1/sha256digest=b9e1bf181a2c095c98838ab3094503e9db556e04cafa51acd35de803d40b010a",
  "/NTORRENT/demo/file0/data/pkt=0/sha256digest=d53eda7a637c99cc7fb566d96e9fa109bf15c478410a3f5eb4d4c4e26cd081f6",
  "/NTORRENT/demo/file0/data/pkt=1/sha256digest=a3b99d59dbb025726312e812c2821cfbe55189f515414bdabd5e3d284c8ad6f9",
  "/NTORRENT/demo/file0/manifest/seg=0/sha256digest=bb7dd0517fd12fa1abf5d4abdaf04abf81108db216f0b7b47cf651fa6b2a6cd1",
  "/NTORRENT/demo/file0/manifest/seg=1/sha256digest=c8c71aec4f82a1727ac32f890222e6d7e2c0500feeaba477f3641d7e8dd32b6c",
};

std::vector<std::string>
fullNames(const TorrentBundle& bundle)
{
  std::vector<std::string> names;
  for (const auto& d : bundle.segmentData) {
    names.push_back(d.getFullName().toUri());
  }
  for (const auto& d : bundle.packets) {
    names.push_back(d.getFullName().toUri());
  }
  for (const auto& d : bundle.manifestData) {
    names.push_back(d.getFullName().toUri());
  }
  return names;
}

} // namespace

BOOST_AUTO_TEST_SUITE(Torrent)

BOOST_AUTO_TEST_CASE(DefaultCounts)
{
  TorrentParams p;
  BOOST_TEST(p.packetCount() == 16);
  BOOST_TEST(p.manifestCount() == 4);
  BOOST_TEST(p.segmentCount() == 2);
  auto bundle = buildTorrent(p);
  BOOST_TEST(bundle.packets.size() == 16);
  BOOST_TEST(bundle.manifestData.size() == 4);
  BOOST_TEST(bundle.segmentData.size() == 2);
  BOOST_TEST(bundle.objectCount() == 22);
  BOOST_TEST(bundle.allObjects().size() == 22);
}

BOOST_AUTO_TEST_CASE(Rounding)
{
  TorrentParams p;
  p.fileCount = 3;
  p.fileSize = 1000;
  p.packetSize = 300;
  p.namesPerManifest = 3;
  p.namesPerSegment = 4;
  BOOST_TEST(p.packetsPerFile() == 4);
  BOOST_TEST(p.manifestsPerFile() == 2);
  BOOST_TEST(p.segmentCount() == 2);
  auto bundle = buildTorrent(p);
  BOOST_TEST(bundle.packets[3].getContent().size() == 100);
  BOOST_TEST(bundle.manifests[1].packetCatalog.size() == 1);
  BOOST_TEST(bundle.segments[1].manifestCatalog.size() == 2);
}

BOOST_AUTO_TEST_CASE(InvalidParameters)
{
  for (auto mutate : std::vector<std::function<void(TorrentParams&)>>{
         [] (auto& p) { p.fileCount = 0; },
         [] (auto& p) { p.fileSize = 0; },
         [] (auto& p) { p.packetSize = 0; },
         [] (auto& p) { p.namesPerManifest = 0; },
         [] (auto& p) { p.namesPerSegment = 0; },
         [] (auto& p) { p.packetSize = p.fileSize + 1; },
         [] (auto& p) { p.torrentName = ""; }}) {
    TorrentParams p;
    mutate(p);
    BOOST_CHECK_THROW(p.validate(), InvalidParams);
    BOOST_CHECK_THROW(buildTorrent(p), InvalidParams);
  }
}

BOOST_AUTO_TEST_CASE(SingleObjectTorrent)
{
  TorrentParams p;
  p.fileCount = 1;
  p.fileSize = 64;
  p.namesPerManifest = 1;
  p.namesPerSegment = 1;
  auto bundle = buildTorrent(p);
  BOOST_TEST(bundle.objectCount() == 3);
  BOOST_TEST(!bundle.segments[0].nextSegment.has_value());
  BOOST_TEST(!bundle.manifests[0].nextManifest.has_value());
}

BOOST_AUTO_TEST_CASE(FullNamesMatchReference)
{
  BOOST_TEST(fullNames(buildTorrent({})) == DEFAULT_FULL_NAMES, boost::test_tools::per_element());

  TorrentParams small;
  small.fileCount = 1;
  small.fileSize = 100;
  small.namesPerManifest = 1;
  small.namesPerSegment = 1;
  BOOST_TEST(fullNames(buildTorrent(small)) == SMALL_FULL_NAMES, boost::test_tools::per_element());
}

BOOST_AUTO_TEST_CASE(ChainsAndCatalogs)
{
  auto bundle = buildTorrent({});
  BOOST_TEST(bundle.firstSegmentName() == bundle.segmentData[0].getFullName());
  BOOST_TEST(bundle.segments[0].nextSegment.value() == bundle.segmentData[1].getFullName());
  BOOST_TEST(!bundle.segments[1].nextSegment.has_value());
  BOOST_TEST(bundle.segments[0].manifestCatalog.size() == 2);

  // every manifest is catalogued exactly once, every packet exactly once
  std::multiset<Name> catalogued;
  for (const auto& s : bundle.segments) {
    catalogued.insert(s.manifestCatalog.begin(), s.manifestCatalog.end());
  }
  for (const auto& m : bundle.manifestData) {
    BOOST_TEST(catalogued.count(m.getFullName()) == 1);
  }
  std::multiset<Name> packets;
  for (const auto& m : bundle.manifests) {
    packets.insert(m.packetCatalog.begin(), m.packetCatalog.end());
    BOOST_TEST(m.signature == "SIG:demo");
  }
  for (const auto& d : bundle.packets) {
    BOOST_TEST(packets.count(d.getFullName()) == 1);
    BOOST_TEST(d.getSignature() == "SIG:demo");
  }
  // next-manifest stays within one file
  BOOST_TEST(bundle.manifests[0].nextManifest.value() == bundle.manifestData[1].getFullName());
  BOOST_TEST(!bundle.manifests[1].nextManifest.has_value());
  BOOST_TEST(bundle.manifests[2].nextManifest.value() == bundle.manifestData[3].getFullName());
}

BOOST_AUTO_TEST_CASE(ObjectContents)
{
  auto bundle = buildTorrent({});
  for (size_t i = 0; i < bundle.segments.size(); ++i) {
    BOOST_TEST((decodeSegment(bundle.segmentData[i].getContent()) == bundle.segments[i]));
  }
  for (size_t i = 0; i < bundle.manifests.size(); ++i) {
    BOOST_TEST((decodeManifest(bundle.manifestData[i].getContent()) == bundle.manifests[i]));
  }
  for (const auto& d : bundle.packets) {
    BOOST_TEST(d.getContent() == Buffer(64, 'A'));
  }
}

BOOST_AUTO_TEST_CASE(EncodingLayout)
{
  FileManifest m;
  m.name = Name{"m"};
  m.packetCatalog = {Name{"p"}};
  m.signature = "S";
  Buffer expected{2, 1, 0, 0, 0, 2, '/', 'm', 0, 0, 0, 1, 0, 0, 0, 2, '/', 'p', 0, 0, 0, 0, 1, 'S'};
  BOOST_TEST(encodeObject(m) == expected, boost::test_tools::per_element());

  TorrentSegment s;
  s.name = Name{"s"};
  s.nextSegment = Name{"n"};
  Buffer expectedSeg{1, 1, 0, 0, 0, 2, '/', 's', 0, 0, 0, 0, 1, 0, 0, 0, 2, '/', 'n', 0, 0, 0, 0};
  BOOST_TEST(encodeObject(s) == expectedSeg, boost::test_tools::per_element());
  BOOST_TEST((decodeSegment(expectedSeg) == s));
}

BOOST_AUTO_TEST_CASE(MalformedInput)
{
  auto bundle = buildTorrent({});
  Buffer good = bundle.manifestData[0].getContent();
  // every strict prefix is truncated input
  for (size_t len = 0; len < good.size(); ++len) {
    BOOST_CHECK_THROW(decodeObject(std::span(good.data(), len)), DecodeError);
  }
  Buffer trailing = good;
  trailing.push_back(0);
  BOOST_CHECK_THROW(decodeObject(trailing), DecodeError);
  Buffer badType = good;
  badType[0] = 7;
  BOOST_CHECK_THROW(decodeObject(badType), DecodeError);
  Buffer badVersion = good;
  badVersion[1] = 2;
  BOOST_CHECK_THROW(decodeObject(badVersion), DecodeError);
  BOOST_CHECK_THROW(decodeSegment(good), DecodeError);
  BOOST_CHECK_THROW(decodeManifest(bundle.segmentData[0].getContent()), DecodeError);
}

BOOST_AUTO_TEST_CASE(Classification)
{
  BOOST_TEST(classifyName(segmentName("demo", 0)) == NameClass::TorrentSegment);
  BOOST_TEST(classifyName(manifestName("demo", 1, 0)) == NameClass::FileManifest);
  BOOST_TEST(classifyName(packetName("demo", 1, 7)) == NameClass::DataPacket);
  BOOST_TEST(classifyName(buildTorrent({}).firstSegmentName()) == NameClass::TorrentSegment);
  BOOST_TEST(classifyName(Name{"NTORRENT", "demo", "other"}) == NameClass::Unknown);
  BOOST_TEST(classifyName(Name{"x"}) == NameClass::Unknown);
  BOOST_TEST(packetName("demo", 1, 7).toUri() == "/NTORRENT/demo/file1/data/pkt=7");
  BOOST_TEST(manifestName("demo", 0, 1).toUri() == "/NTORRENT/demo/file0/manifest/seg=1");
  BOOST_TEST(segmentName("demo", 1).toUri() == "/NTORRENT/demo/torrent-file/seg=1");
}

BOOST_AUTO_TEST_SUITE_END()

} // namespace ntsim::torrent::tests
