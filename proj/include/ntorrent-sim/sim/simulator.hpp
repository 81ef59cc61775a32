/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#ifndef NTSIM_SIM_SIMULATOR_HPP
#define NTSIM_SIM_SIMULATOR_HPP

#include "ntorrent-sim/common.hpp"

#include <functional>
#include <queue>
#include <stdexcept>

namespace ntsim::sim {

/// A bug trap: something tried to schedule into the past.
class InternalError : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

struct RunReport
{
  Time endTime{0};
  uint64_t eventsExecuted = 0;
  /// the stop predicate ended the run
  bool stopped = false;
  /// the next event lay beyond the time limit
  bool hitTimeLimit = false;
  bool queueEmpty = false;
};

/// Single-threaded discrete-event core. Events run in (time, insertion order).
class Simulator
{
public:
  using Action = std::function<void()>;

  Time
  now() const
  {
    return m_now;
  }

  /// @throw InternalError if @p at is before now()
  void
  schedule(Time at, Action action);

  void
  scheduleAfter(Time delay, Action action)
  {
    schedule(m_now + delay, std::move(action));
  }

  /// Runs until the queue empties, @p shouldStop returns true after an
  /// event, or the next event lies past @p maxTime.
  RunReport
  run(Time maxTime, const std::function<bool()>& shouldStop = {});

  /// Called after every executed event.
  void
  setAfterEventHook(std::function<void(Time)> hook)
  {
    m_afterEvent = std::move(hook);
  }

  size_t
  getPendingCount() const
  {
    return m_queue.size();
  }

  uint64_t
  getExecutedCount() const
  {
    return m_nExecuted;
  }

private:
  struct Event
  {
    Time at;
    uint64_t seq;
    Action action;
  };

  struct Later
  {
    bool
    operator()(const Event& a, const Event& b) const
    {
      return a.at != b.at ? a.at > b.at : a.seq > b.seq;
    }
  };

  Time m_now{0};
  uint64_t m_nextSeq = 0;
  uint64_t m_nExecuted = 0;
  std::priority_queue<Event, std::vector<Event>, Later> m_queue;
  std::function<void(Time)> m_afterEvent;
};

} // namespace ntsim::sim

#endif // NTSIM_SIM_SIMULATOR_HPP
