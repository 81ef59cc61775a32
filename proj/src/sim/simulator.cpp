/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#include "ntorrent-sim/sim/simulator.hpp"

namespace ntsim::sim {

void
Simulator::schedule(Time at, Action action)
{
  if (at < m_now) {
    throw InternalError("event scheduled at " + formatMilliseconds(at) +
                        " ms, before current time " + formatMilliseconds(m_now) + " ms");
  }
  m_queue.push(Event{at, m_nextSeq++, std::move(action)});
}

RunReport
Simulator::run(Time maxTime, const std::function<bool()>& shouldStop)
{
  RunReport report;
  uint64_t executedBefore = m_nExecuted;
  while (true) {
    if (m_queue.empty()) {
      report.queueEmpty = true;
      break;
    }
    if (m_queue.top().at > maxTime) {
      report.hitTimeLimit = true;
      m_now = maxTime;
      break;
    }
    // copy out before pop: the action may schedule more events
    Event event = m_queue.top();
    m_queue.pop();
    m_now = event.at;
    event.action();
    ++m_nExecuted;
    if (m_afterEvent) {
      m_afterEvent(m_now);
    }
    if (shouldStop && shouldStop()) {
      report.stopped = true;
      break;
    }
  }
  report.endTime = m_now;
  report.eventsExecuted = m_nExecuted - executedBefore;
  return report;
}

} // namespace ntsim::sim
