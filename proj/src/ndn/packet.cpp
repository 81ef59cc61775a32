/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#include "ntorrent-sim/ndn/packet.hpp"

#include <ostream>

namespace ntsim::ndn {

Data::Data(Name name, Buffer content, std::string signature)
  : m_name(std::move(name))
  , m_content(std::move(content))
  , m_signature(std::move(signature))
  , m_digest(sha256(m_content))
{
}

bool
Data::verify() const
{
  return sha256(m_content) == m_digest;
}

bool
Data::canSatisfy(const Name& interestName) const
{
  if (interestName == m_name) {
    return true;
  }
  if (interestName.size() != m_name.size() + 1 || !m_name.isPrefixOf(interestName)) {
    return false;
  }
  auto digest = ndn::getDigest(interestName);
  return digest && *digest == m_digest;
}

std::string_view
toString(NackReason reason)
{
  switch (reason) {
  case NackReason::NoRoute:
    return "NoRoute";
  case NackReason::NoContent:
    return "NoContent";
  case NackReason::Duplicate:
    return "Duplicate";
  }
  return "Unknown";
}

std::ostream&
operator<<(std::ostream& os, NackReason reason)
{
  return os << toString(reason);
}

size_t
wireSize(const Packet& packet)
{
  return std::visit([] (const auto& p) -> size_t {
    using T = std::decay_t<decltype(p)>;
    if constexpr (std::is_same_v<T, Interest>)
      return INTEREST_SIZE;
    else if constexpr (std::is_same_v<T, Data>)
      return p.wireSize();
    else
      return NACK_SIZE;
  }, packet);
}

const Name&
getName(const Packet& packet)
{
  return std::visit([] (const auto& p) -> const Name& {
    using T = std::decay_t<decltype(p)>;
    if constexpr (std::is_same_v<T, Data>)
      return p.getName();
    else
      return p.name;
  }, packet);
}

} // namespace ntsim::ndn
