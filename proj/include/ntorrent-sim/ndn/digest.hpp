/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#ifndef NTSIM_NDN_DIGEST_HPP
#define NTSIM_NDN_DIGEST_HPP

#include "ntorrent-sim/ndn/name.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace ntsim::ndn {

using Sha256Digest = std::array<uint8_t, 32>;

Sha256Digest
sha256(std::span<const uint8_t> bytes);

inline Sha256Digest
sha256(std::string_view text)
{
  return sha256(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(text.data()), text.size()));
}

/// Lower-case hex, 64 characters.
std::string
toHex(const Sha256Digest& digest);

std::optional<Sha256Digest>
fromHex(std::string_view hex);

inline constexpr std::string_view DIGEST_COMPONENT_PREFIX = "sha256digest=";

/// Returns @p name with a final `sha256digest=<hex>` component for @p content.
Name
appendDigest(const Name& name, std::span<const uint8_t> content);

Name
appendDigest(const Name& name, const Sha256Digest& digest);

bool
isDigestComponent(const Name::Component& component);

/// Digest carried by the last component, if that component is a digest component.
std::optional<Sha256Digest>
getDigest(const Name& name);

/// Removes every trailing digest component.
Name
stripDigest(const Name& name);

} // namespace ntsim::ndn

#endif // NTSIM_NDN_DIGEST_HPP
