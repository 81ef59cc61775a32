/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#ifndef NTSIM_COMMON_HPP
#define NTSIM_COMMON_HPP

#include <chrono>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace ntsim {

/// Simulation clock. Integer nanoseconds so delay sums stay exact.
using Time = std::chrono::nanoseconds;
using std::chrono::milliseconds;

using NodeId = uint32_t;
using FaceId = uint64_t;
using LinkId = uint32_t;

using Buffer = std::vector<uint8_t>;

constexpr NodeId INVALID_NODE = std::numeric_limits<NodeId>::max();
constexpr FaceId INVALID_FACEID = 0;
/// Application faces are numbered from here, below the link range.
constexpr FaceId FACEID_APP_BASE = 1;
/// Link faces are numbered from here.
constexpr FaceId FACEID_LINK_BASE = 256;

inline double
toMilliseconds(Time t)
{
  return static_cast<double>(t.count()) / 1e6;
}

inline Time
fromMilliseconds(double ms)
{
  return Time(static_cast<int64_t>(ms * 1e6 + (ms >= 0 ? 0.5 : -0.5)));
}

/// Render a duration as milliseconds with exactly three decimals.
std::string
formatMilliseconds(Time t);

} // namespace ntsim

#endif // NTSIM_COMMON_HPP
