/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#ifndef NTSIM_TORRENT_TORRENT_MODEL_HPP
#define NTSIM_TORRENT_TORRENT_MODEL_HPP

#include "ntorrent-sim/ndn/packet.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ntsim::torrent {

using ndn::Data;
using ndn::Name;

class InvalidParams : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

class DecodeError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct TorrentParams
{
  std::string torrentName = "demo";
  size_t fileCount = 2;
  /// size of each file
  size_t fileSize = 512;
  size_t packetSize = 64;
  size_t namesPerManifest = 4;
  size_t namesPerSegment = 2;

  /// @throw InvalidParams
  void
  validate() const;

  size_t
  packetsPerFile() const;

  size_t
  manifestsPerFile() const;

  size_t
  packetCount() const
  {
    return packetsPerFile() * fileCount;
  }

  size_t
  manifestCount() const
  {
    return manifestsPerFile() * fileCount;
  }

  size_t
  segmentCount() const;

  bool operator==(const TorrentParams&) const = default;
};

struct TorrentSegment
{
  Name name;
  /// full manifest names, digests included
  std::vector<Name> manifestCatalog;
  std::optional<Name> nextSegment;
  std::string signature;

  bool operator==(const TorrentSegment&) const = default;
};

struct FileManifest
{
  Name name;
  /// full packet names, digests included
  std::vector<Name> packetCatalog;
  std::optional<Name> nextManifest;
  std::string signature;

  bool operator==(const FileManifest&) const = default;
};

struct TorrentBundle
{
  TorrentParams params;
  std::vector<TorrentSegment> segments;
  std::vector<FileManifest> manifests;
  std::vector<Data> segmentData;
  std::vector<Data> manifestData;
  std::vector<Data> packets;

  /// Full name (with digest) of torrent-file segment 0.
  Name
  firstSegmentName() const;

  /// Segments, then manifests, then packets.
  std::vector<Data>
  allObjects() const;

  size_t
  objectCount() const
  {
    return segmentData.size() + manifestData.size() + packets.size();
  }
};

enum class NameClass {
  TorrentSegment,
  FileManifest,
  DataPacket,
  Unknown,
};

std::string_view
toString(NameClass nameClass);

std::ostream&
operator<<(std::ostream& os, NameClass nameClass);

inline constexpr std::string_view NAME_ROOT = "NTORRENT";

Name
torrentPrefix(std::string_view torrentName);

Name
segmentName(std::string_view torrentName, size_t segment);

Name
manifestName(std::string_view torrentName, size_t file, size_t manifest);

Name
packetName(std::string_view torrentName, size_t file, size_t packet);

/// Placeholder publisher signature, `SIG:<publisher-id>`.
std::string
publisherSignature(std::string_view torrentName);

/// Trailing digest components are ignored.
NameClass
classifyName(const Name& name);

/// Builds every segment, manifest and packet for @p params.
/// @throw InvalidParams
TorrentBundle
buildTorrent(const TorrentParams& params);

Buffer
encodeObject(const TorrentSegment& segment);

Buffer
encodeObject(const FileManifest& manifest);

using TorrentObject = std::variant<TorrentSegment, FileManifest>;

/// @throw DecodeError on malformed input
TorrentObject
decodeObject(std::span<const uint8_t> bytes);

TorrentSegment
decodeSegment(std::span<const uint8_t> bytes);

FileManifest
decodeManifest(std::span<const uint8_t> bytes);

} // namespace ntsim::torrent

#endif // NTSIM_TORRENT_TORRENT_MODEL_HPP
