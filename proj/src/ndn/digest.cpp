/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#include "ntorrent-sim/ndn/digest.hpp"

#include <openssl/evp.h>

#include <memory>
#include <stdexcept>

namespace ntsim::ndn {

Sha256Digest
sha256(std::span<const uint8_t> bytes)
{
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  Sha256Digest out{};
  unsigned int len = 0;
  if (!ctx ||
      EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), out.data(), &len) != 1 ||
      len != out.size()) {
    throw std::runtime_error("SHA-256 computation failed");
  }
  return out;
}

std::string
toHex(const Sha256Digest& digest)
{
  static constexpr char HEX[] = "0123456789abcdef";
  std::string out;
  out.reserve(digest.size() * 2);
  for (uint8_t b : digest) {
    out.push_back(HEX[b >> 4]);
    out.push_back(HEX[b & 0x0f]);
  }
  return out;
}

std::optional<Sha256Digest>
fromHex(std::string_view hex)
{
  if (hex.size() != 64) {
    return std::nullopt;
  }
  auto nibble = [] (char c) -> int {
    if (c >= '0' && c <= '9')
      return c - '0';
    if (c >= 'a' && c <= 'f')
      return c - 'a' + 10;
    return -1;
  };
  Sha256Digest out{};
  for (size_t i = 0; i < out.size(); ++i) {
    int hi = nibble(hex[2 * i]);
    int lo = nibble(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) {
      return std::nullopt;
    }
    out[i] = static_cast<uint8_t>((hi << 4) | lo);
  }
  return out;
}

Name
appendDigest(const Name& name, std::span<const uint8_t> content)
{
  return appendDigest(name, sha256(content));
}

Name
appendDigest(const Name& name, const Sha256Digest& digest)
{
  Name out = name;
  out.append(std::string(DIGEST_COMPONENT_PREFIX) + toHex(digest));
  return out;
}

bool
isDigestComponent(const Name::Component& component)
{
  return component.size() == DIGEST_COMPONENT_PREFIX.size() + 64 &&
         std::string_view(component).substr(0, DIGEST_COMPONENT_PREFIX.size()) == DIGEST_COMPONENT_PREFIX &&
         fromHex(std::string_view(component).substr(DIGEST_COMPONENT_PREFIX.size())).has_value();
}

std::optional<Sha256Digest>
getDigest(const Name& name)
{
  if (name.empty() || !isDigestComponent(name.get(-1))) {
    return std::nullopt;
  }
  return fromHex(std::string_view(name.get(-1)).substr(DIGEST_COMPONENT_PREFIX.size()));
}

Name
stripDigest(const Name& name)
{
  size_t n = name.size();
  while (n > 0 && isDigestComponent(name.components()[n - 1])) {
    --n;
  }
  return name.getPrefix(static_cast<ptrdiff_t>(n));
}

} // namespace ntsim::ndn
