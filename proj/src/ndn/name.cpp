/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#include "ntorrent-sim/ndn/name.hpp"

#include <algorithm>
#include <ostream>

namespace ntsim::ndn {

namespace {

bool
isUnreserved(unsigned char c)
{
  return c > 0x20 && c < 0x7f && c != '/' && c != '%' && c != '?';
}

int
hexValue(char c)
{
  if (c >= '0' && c <= '9')
    return c - '0';
  if (c >= 'a' && c <= 'f')
    return c - 'a' + 10;
  if (c >= 'A' && c <= 'F')
    return c - 'A' + 10;
  return -1;
}

void
appendComponentUri(std::string& out, const Name::Component& component)
{
  if (std::all_of(component.begin(), component.end(), [] (char c) { return c == '.'; })) {
    out.append(component);
    out.append("...");
    return;
  }

  static constexpr char HEX[] = "0123456789ABCDEF";
  for (unsigned char c : component) {
    if (isUnreserved(c)) {
      out.push_back(static_cast<char>(c));
    }
    else {
      out.push_back('%');
      out.push_back(HEX[c >> 4]);
      out.push_back(HEX[c & 0x0f]);
    }
  }
}

Name::Component
parseComponentUri(std::string_view text)
{
  if (!text.empty() && std::all_of(text.begin(), text.end(), [] (char c) { return c == '.'; })) {
    if (text.size() < 3) {
      throw Name::Error("illegal component '" + std::string(text) + "'");
    }
    return Name::Component(text.size() - 3, '.');
  }

  Name::Component component;
  component.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '%') {
      component.push_back(text[i]);
      continue;
    }
    if (i + 2 >= text.size()) {
      throw Name::Error("truncated percent escape in '" + std::string(text) + "'");
    }
    int hi = hexValue(text[i + 1]);
    int lo = hexValue(text[i + 2]);
    if (hi < 0 || lo < 0) {
      throw Name::Error("bad percent escape in '" + std::string(text) + "'");
    }
    component.push_back(static_cast<char>((hi << 4) | lo));
    i += 2;
  }
  return component;
}

} // namespace

Name
Name::fromUri(std::string_view uri)
{
  if (uri.empty() || uri.front() != '/') {
    throw Error("name URI must start with '/': '" + std::string(uri) + "'");
  }

  // empty segments ("//", trailing '/') carry no component; the empty
  // component itself is written "..."
  Name name;
  uri.remove_prefix(1);
  while (!uri.empty()) {
    size_t slash = uri.find('/');
    auto segment = uri.substr(0, slash);
    if (!segment.empty()) {
      name.append(parseComponentUri(segment));
    }
    if (slash == std::string_view::npos) {
      break;
    }
    uri.remove_prefix(slash + 1);
  }
  return name;
}

std::string
Name::toUri() const
{
  if (m_components.empty()) {
    throw EmptyName();
  }

  std::string out;
  for (const auto& component : m_components) {
    out.push_back('/');
    appendComponentUri(out, component);
  }
  return out;
}

Name&
Name::append(const Name& suffix)
{
  m_components.insert(m_components.end(), suffix.m_components.begin(), suffix.m_components.end());
  return *this;
}

const Name::Component&
Name::get(ptrdiff_t i) const
{
  ptrdiff_t n = static_cast<ptrdiff_t>(m_components.size());
  ptrdiff_t idx = i < 0 ? n + i : i;
  if (idx < 0 || idx >= n) {
    throw std::out_of_range("name component index out of range");
  }
  return m_components[static_cast<size_t>(idx)];
}

Name
Name::getPrefix(ptrdiff_t n) const
{
  ptrdiff_t total = static_cast<ptrdiff_t>(m_components.size());
  ptrdiff_t count = n < 0 ? total + n : n;
  count = std::clamp<ptrdiff_t>(count, 0, total);
  return Name(std::vector<Component>(m_components.begin(), m_components.begin() + count));
}

bool
Name::isPrefixOf(const Name& other) const
{
  if (m_components.size() > other.m_components.size()) {
    return false;
  }
  return std::equal(m_components.begin(), m_components.end(), other.m_components.begin());
}

std::ostream&
operator<<(std::ostream& os, const Name& name)
{
  if (name.empty()) {
    return os << "/";
  }
  return os << name.toUri();
}

} // namespace ntsim::ndn

size_t
std::hash<ntsim::ndn::Name>::operator()(const ntsim::ndn::Name& name) const noexcept
{
  size_t seed = name.size();
  std::hash<std::string> h;
  for (const auto& component : name.components()) {
    seed ^= h(component) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed;
}
