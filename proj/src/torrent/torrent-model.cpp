/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#include "ntorrent-sim/torrent/torrent-model.hpp"

#include <charconv>
#include <ostream>

namespace ntsim::torrent {

namespace {

constexpr uint8_t TYPE_SEGMENT = 0x01;
constexpr uint8_t TYPE_MANIFEST = 0x02;
constexpr uint8_t ENCODING_VERSION = 1;

size_t
ceilDiv(size_t a, size_t b)
{
  return (a + b - 1) / b;
}

std::string
numbered(std::string_view key, size_t value)
{
  return std::string(key) + "=" + std::to_string(value);
}

/// Parses "<key>=<decimal>" and returns the number.
std::optional<size_t>
parseNumbered(std::string_view component, std::string_view key)
{
  if (component.size() <= key.size() + 1 ||
      component.substr(0, key.size()) != key ||
      component[key.size()] != '=') {
    return std::nullopt;
  }
  auto digits = component.substr(key.size() + 1);
  size_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    return std::nullopt;
  }
  return value;
}

std::optional<size_t>
parseFileComponent(std::string_view component)
{
  constexpr std::string_view key = "file";
  if (component.size() <= key.size() || component.substr(0, key.size()) != key) {
    return std::nullopt;
  }
  auto digits = component.substr(key.size());
  size_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    return std::nullopt;
  }
  return value;
}

class Writer
{
public:
  void
  byte(uint8_t b)
  {
    m_out.push_back(b);
  }

  void
  u32(uint32_t v)
  {
    for (int shift = 24; shift >= 0; shift -= 8) {
      m_out.push_back(static_cast<uint8_t>(v >> shift));
    }
  }

  void
  bytes(std::string_view s)
  {
    u32(static_cast<uint32_t>(s.size()));
    m_out.insert(m_out.end(), s.begin(), s.end());
  }

  void
  name(const Name& n)
  {
    bytes(n.toUri());
  }

  Buffer
  finish()
  {
    return std::move(m_out);
  }

private:
  Buffer m_out;
};

class Reader
{
public:
  explicit
  Reader(std::span<const uint8_t> in)
    : m_in(in)
  {
  }

  uint8_t
  byte()
  {
    need(1);
    return m_in[m_pos++];
  }

  uint32_t
  u32()
  {
    need(4);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
      v = (v << 8) | m_in[m_pos++];
    }
    return v;
  }

  std::string
  bytes()
  {
    uint32_t len = u32();
    need(len);
    std::string s(reinterpret_cast<const char*>(m_in.data() + m_pos), len);
    m_pos += len;
    return s;
  }

  Name
  name()
  {
    try {
      Name n = Name::fromUri(bytes());
      if (n.empty()) {
        throw DecodeError("empty name in encoded object");
      }
      return n;
    }
    catch (const Name::Error& e) {
      throw DecodeError(std::string("bad name in encoded object: ") + e.what());
    }
  }

  void
  expectEnd() const
  {
    if (m_pos != m_in.size()) {
      throw DecodeError("trailing bytes after encoded object");
    }
  }

private:
  void
  need(size_t n) const
  {
    if (m_in.size() - m_pos < n) {
      throw DecodeError("truncated encoded object");
    }
  }

private:
  std::span<const uint8_t> m_in;
  size_t m_pos = 0;
};

template<typename Object>
Buffer
encodeCommon(uint8_t type, const Object& object, const std::vector<Name>& catalog,
             const std::optional<Name>& next)
{
  Writer w;
  w.byte(type);
  w.byte(ENCODING_VERSION);
  w.name(object.name);
  w.u32(static_cast<uint32_t>(catalog.size()));
  for (const auto& entry : catalog) {
    w.name(entry);
  }
  w.byte(next ? 1 : 0);
  if (next) {
    w.name(*next);
  }
  w.bytes(object.signature);
  return w.finish();
}

struct DecodedFields
{
  uint8_t type;
  Name name;
  std::vector<Name> catalog;
  std::optional<Name> next;
  std::string signature;
};

DecodedFields
decodeCommon(std::span<const uint8_t> bytes)
{
  Reader r(bytes);
  DecodedFields f;
  f.type = r.byte();
  if (f.type != TYPE_SEGMENT && f.type != TYPE_MANIFEST) {
    throw DecodeError("unknown object type " + std::to_string(f.type));
  }
  uint8_t version = r.byte();
  if (version != ENCODING_VERSION) {
    throw DecodeError("unsupported encoding version " + std::to_string(version));
  }
  f.name = r.name();
  uint32_t count = r.u32();
  if (count > bytes.size()) {
    throw DecodeError("catalog count exceeds input size");
  }
  f.catalog.reserve(count);
  for (uint32_t i = 0; i < count; ++i) {
    f.catalog.push_back(r.name());
  }
  switch (r.byte()) {
  case 0:
    break;
  case 1:
    f.next = r.name();
    break;
  default:
    throw DecodeError("bad next-pointer flag");
  }
  f.signature = r.bytes();
  r.expectEnd();
  return f;
}

} // namespace

void
TorrentParams::validate() const
{
  if (torrentName.empty()) {
    throw InvalidParams("torrent name must not be empty");
  }
  if (fileCount < 1 || fileSize < 1 || packetSize < 1 || namesPerManifest < 1 || namesPerSegment < 1) {
    throw InvalidParams("torrent counts and sizes must be at least 1");
  }
  if (packetSize > fileSize) {
    throw InvalidParams("packet size must not exceed file size");
  }
}

size_t
TorrentParams::packetsPerFile() const
{
  return ceilDiv(fileSize, packetSize);
}

size_t
TorrentParams::manifestsPerFile() const
{
  return ceilDiv(packetsPerFile(), namesPerManifest);
}

size_t
TorrentParams::segmentCount() const
{
  return ceilDiv(manifestCount(), namesPerSegment);
}

Name
TorrentBundle::firstSegmentName() const
{
  return segmentData.front().getFullName();
}

std::vector<Data>
TorrentBundle::allObjects() const
{
  std::vector<Data> all;
  all.reserve(objectCount());
  all.insert(all.end(), segmentData.begin(), segmentData.end());
  all.insert(all.end(), manifestData.begin(), manifestData.end());
  all.insert(all.end(), packets.begin(), packets.end());
  return all;
}

std::string_view
toString(NameClass nameClass)
{
  switch (nameClass) {
  case NameClass::TorrentSegment:
    return "TorrentSegment";
  case NameClass::FileManifest:
    return "FileManifest";
  case NameClass::DataPacket:
    return "DataPacket";
  case NameClass::Unknown:
    break;
  }
  return "Unknown";
}

Name
torrentPrefix(std::string_view torrentName)
{
  return Name{std::string(NAME_ROOT), std::string(torrentName)};
}

Name
segmentName(std::string_view torrentName, size_t segment)
{
  return torrentPrefix(torrentName).append("torrent-file").append(numbered("seg", segment));
}

Name
manifestName(std::string_view torrentName, size_t file, size_t manifest)
{
  return torrentPrefix(torrentName)
    .append("file" + std::to_string(file))
    .append("manifest")
    .append(numbered("seg", manifest));
}

Name
packetName(std::string_view torrentName, size_t file, size_t packet)
{
  return torrentPrefix(torrentName)
    .append("file" + std::to_string(file))
    .append("data")
    .append(numbered("pkt", packet));
}

std::string
publisherSignature(std::string_view torrentName)
{
  return "SIG:" + std::string(torrentName);
}

std::ostream&
operator<<(std::ostream& os, NameClass nameClass)
{
  return os << toString(nameClass);
}

NameClass
classifyName(const Name& name)
{
  Name base = ndn::stripDigest(name);
  if (base.size() < 4 || base.get(0) != NAME_ROOT || base.get(1).empty()) {
    return NameClass::Unknown;
  }

  if (base.size() == 4 && base.get(2) == "torrent-file" && parseNumbered(base.get(3), "seg")) {
    return NameClass::TorrentSegment;
  }
  if (base.size() == 5 && parseFileComponent(base.get(2))) {
    if (base.get(3) == "manifest" && parseNumbered(base.get(4), "seg")) {
      return NameClass::FileManifest;
    }
    if (base.get(3) == "data" && parseNumbered(base.get(4), "pkt")) {
      return NameClass::DataPacket;
    }
  }
  return NameClass::Unknown;
}

TorrentBundle
buildTorrent(const TorrentParams& params)
{
  params.validate();

  TorrentBundle bundle;
  bundle.params = params;
  const auto& t = params.torrentName;
  const std::string signature = publisherSignature(t);
  const size_t perFile = params.packetsPerFile();

  std::vector<Name> packetFullNames;
  for (size_t file = 0; file < params.fileCount; ++file) {
    for (size_t p = 0; p < perFile; ++p) {
      size_t len = std::min(params.packetSize, params.fileSize - p * params.packetSize);
      Data data(packetName(t, file, p), Buffer(len, 'A'), signature);
      packetFullNames.push_back(data.getFullName());
      bundle.packets.push_back(std::move(data));
    }
  }

  // each manifest points at its successor's full name, so build back to front
  const size_t manifestsPerFile = params.manifestsPerFile();
  bundle.manifests.resize(params.manifestCount());
  bundle.manifestData.resize(params.manifestCount());
  for (size_t file = 0; file < params.fileCount; ++file) {
    std::optional<Name> next;
    for (size_t m = manifestsPerFile; m-- > 0;) {
      FileManifest manifest;
      manifest.name = manifestName(t, file, m);
      size_t first = file * perFile + m * params.namesPerManifest;
      size_t last = std::min(file * perFile + perFile, first + params.namesPerManifest);
      manifest.packetCatalog.assign(packetFullNames.begin() + first, packetFullNames.begin() + last);
      manifest.nextManifest = next;
      manifest.signature = signature;

      Data data(manifest.name, encodeObject(manifest), signature);
      next = data.getFullName();
      size_t idx = file * manifestsPerFile + m;
      bundle.manifests[idx] = std::move(manifest);
      bundle.manifestData[idx] = std::move(data);
    }
  }

  const size_t segmentCount = params.segmentCount();
  bundle.segments.resize(segmentCount);
  bundle.segmentData.resize(segmentCount);
  std::optional<Name> next;
  for (size_t k = segmentCount; k-- > 0;) {
    TorrentSegment segment;
    segment.name = segmentName(t, k);
    size_t first = k * params.namesPerSegment;
    size_t last = std::min(bundle.manifestData.size(), first + params.namesPerSegment);
    for (size_t i = first; i < last; ++i) {
      segment.manifestCatalog.push_back(bundle.manifestData[i].getFullName());
    }
    segment.nextSegment = next;
    segment.signature = signature;

    Data data(segment.name, encodeObject(segment), signature);
    next = data.getFullName();
    bundle.segments[k] = std::move(segment);
    bundle.segmentData[k] = std::move(data);
  }

  return bundle;
}

Buffer
encodeObject(const TorrentSegment& segment)
{
  return encodeCommon(TYPE_SEGMENT, segment, segment.manifestCatalog, segment.nextSegment);
}

Buffer
encodeObject(const FileManifest& manifest)
{
  return encodeCommon(TYPE_MANIFEST, manifest, manifest.packetCatalog, manifest.nextManifest);
}

TorrentObject
decodeObject(std::span<const uint8_t> bytes)
{
  auto f = decodeCommon(bytes);
  if (f.type == TYPE_SEGMENT) {
    return TorrentSegment{std::move(f.name), std::move(f.catalog), std::move(f.next), std::move(f.signature)};
  }
  return FileManifest{std::move(f.name), std::move(f.catalog), std::move(f.next), std::move(f.signature)};
}

TorrentSegment
decodeSegment(std::span<const uint8_t> bytes)
{
  auto object = decodeObject(bytes);
  if (auto* segment = std::get_if<TorrentSegment>(&object)) {
    return std::move(*segment);
  }
  throw DecodeError("encoded object is not a torrent segment");
}

FileManifest
decodeManifest(std::span<const uint8_t> bytes)
{
  auto object = decodeObject(bytes);
  if (auto* manifest = std::get_if<FileManifest>(&object)) {
    return std::move(*manifest);
  }
  throw DecodeError("encoded object is not a file manifest");
}

} // namespace ntsim::torrent
