/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#ifndef NTSIM_NDN_PACKET_HPP
#define NTSIM_NDN_PACKET_HPP

#include "ntorrent-sim/common.hpp"
#include "ntorrent-sim/ndn/digest.hpp"
#include "ntorrent-sim/ndn/name.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace ntsim::ndn {

/// Placeholder overhead added to content bytes on the wire.
inline constexpr size_t DATA_HEADER_SIZE = 40;
inline constexpr size_t INTEREST_SIZE = 30;
inline constexpr size_t NACK_SIZE = 30;

inline constexpr milliseconds DEFAULT_INTEREST_LIFETIME{4000};

struct Interest
{
  Name name;
  uint32_t nonce = 0;
  milliseconds lifetime = DEFAULT_INTEREST_LIFETIME;
  uint32_t hopCount = 0;
};

/**
 * Simulation-only annotations that ride along with a Data packet.
 * They never count toward wire size and are ignored by equality.
 */
struct DataTags
{
  /// node and face where an application injected this Data
  NodeId originNode = INVALID_NODE;
  FaceId originFace = INVALID_FACEID;
  /// nodes that transmitted this copy over a link, in order
  std::vector<NodeId> path;
};

class Data
{
public:
  Data() = default;

  /// Builds a Data packet whose digest is computed from @p content.
  Data(Name name, Buffer content, std::string signature);

  const Name&
  getName() const
  {
    return m_name;
  }

  const Buffer&
  getContent() const
  {
    return m_content;
  }

  const std::string&
  getSignature() const
  {
    return m_signature;
  }

  const Sha256Digest&
  getDigest() const
  {
    return m_digest;
  }

  /// Name with the digest component appended.
  Name
  getFullName() const
  {
    return appendDigest(m_name, m_digest);
  }

  /// Recomputes SHA-256 over the content and compares with the carried digest.
  bool
  verify() const;

  /// True if this Data satisfies an Interest for @p interestName:
  /// exact name match, or name plus this Data's digest component.
  bool
  canSatisfy(const Name& interestName) const;

  size_t
  wireSize() const
  {
    return m_content.size() + DATA_HEADER_SIZE;
  }

  /// Test hook: replace content without updating the digest.
  void
  corruptContent(Buffer content)
  {
    m_content = std::move(content);
  }

  friend bool
  operator==(const Data& a, const Data& b)
  {
    return a.m_name == b.m_name && a.m_content == b.m_content &&
           a.m_signature == b.m_signature && a.m_digest == b.m_digest;
  }

public:
  DataTags tags;

private:
  Name m_name;
  Buffer m_content;
  std::string m_signature;
  Sha256Digest m_digest{};
};

enum class NackReason {
  NoRoute,
  NoContent,
  Duplicate,
};

std::string_view
toString(NackReason reason);

std::ostream&
operator<<(std::ostream& os, NackReason reason);

struct Nack
{
  Name name;
  uint32_t nonce = 0;
  NackReason reason = NackReason::NoRoute;
};

using Packet = std::variant<Interest, Data, Nack>;

size_t
wireSize(const Packet& packet);

const Name&
getName(const Packet& packet);

} // namespace ntsim::ndn

#endif // NTSIM_NDN_PACKET_HPP
