/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#ifndef NTSIM_NDN_NAME_HPP
#define NTSIM_NDN_NAME_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ntsim::ndn {

/**
 * @brief An NDN name: an ordered list of opaque byte-string components.
 *
 * The URI form is `/c1/c2/.../cn`. Bytes outside printable ASCII, as well as
 * '/', '%' and '?', are percent-encoded. A component made only of periods
 * (including the empty component) is written with three extra periods, so
 * parsing the rendered form always gives back the same components.
 */
class Name
{
public:
  class Error : public std::invalid_argument
  {
  public:
    using std::invalid_argument::invalid_argument;
  };

  /// Raised when rendering a name that has no components.
  class EmptyName : public Error
  {
  public:
    EmptyName()
      : Error("EmptyName: cannot render a name with no components")
    {
    }
  };

  using Component = std::string;

  Name() = default;

  Name(std::initializer_list<Component> components)
    : m_components(components)
  {
  }

  explicit
  Name(std::vector<Component> components)
    : m_components(std::move(components))
  {
  }

  /// Parse a URI such as `/NTORRENT/demo/torrent-file/seg=0`.
  static Name
  fromUri(std::string_view uri);

  /// @throw EmptyName if the name has no components
  std::string
  toUri() const;

  Name&
  append(Component component)
  {
    m_components.push_back(std::move(component));
    return *this;
  }

  Name&
  append(const Name& suffix);

  bool
  empty() const
  {
    return m_components.empty();
  }

  size_t
  size() const
  {
    return m_components.size();
  }

  /// Negative indices count from the end (-1 is the last component).
  const Component&
  get(ptrdiff_t i) const;

  /// First @p n components; negative @p n drops components from the end.
  Name
  getPrefix(ptrdiff_t n) const;

  /// True iff every component of this name equals the leading component of @p other.
  bool
  isPrefixOf(const Name& other) const;

  const std::vector<Component>&
  components() const
  {
    return m_components;
  }

  auto operator<=>(const Name&) const = default;
  bool operator==(const Name&) const = default;

private:
  std::vector<Component> m_components;
};

std::ostream&
operator<<(std::ostream& os, const Name& name);

} // namespace ntsim::ndn

template<>
struct std::hash<ntsim::ndn::Name>
{
  size_t
  operator()(const ntsim::ndn::Name& name) const noexcept;
};

#endif // NTSIM_NDN_NAME_HPP
