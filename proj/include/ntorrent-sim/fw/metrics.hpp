/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#ifndef NTSIM_FW_METRICS_HPP
#define NTSIM_FW_METRICS_HPP

#include "ntorrent-sim/common.hpp"

#include <optional>

namespace ntsim::fw {

/// Per-node InterestSatisfactionRate and AverageDelay bookkeeping.
struct Metrics
{
  uint64_t interestsSent = 0;
  uint64_t interestsSatisfied = 0;
  uint64_t interestsNacked = 0;
  uint64_t interestsTimedOut = 0;
  Time delaySum{0};
  uint64_t delayCount = 0;

  void
  recordDelay(Time delay)
  {
    delaySum += delay;
    ++delayCount;
  }

  /// satisfied / sent; nullopt when nothing was sent
  std::optional<double>
  interestSatisfactionRate() const
  {
    if (interestsSent == 0) {
      return std::nullopt;
    }
    return static_cast<double>(interestsSatisfied) / static_cast<double>(interestsSent);
  }

  /// mean Interest-to-Data delay in ms; nullopt without samples
  std::optional<double>
  averageDelayMs() const
  {
    if (delayCount == 0) {
      return std::nullopt;
    }
    return toMilliseconds(delaySum) / static_cast<double>(delayCount);
  }

  std::optional<Time>
  averageDelay() const
  {
    if (delayCount == 0) {
      return std::nullopt;
    }
    return delaySum / static_cast<int64_t>(delayCount);
  }
};

} // namespace ntsim::fw

#endif // NTSIM_FW_METRICS_HPP
