/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#ifndef NTSIM_SCENARIO_RUNNER_HPP
#define NTSIM_SCENARIO_RUNNER_HPP

#include "ntorrent-sim/scenario/scenario.hpp"
#include "ntorrent-sim/sim/invariant-auditor.hpp"
#include "ntorrent-sim/trace/metrics-report.hpp"
#include "ntorrent-sim/trace/rate-tracer.hpp"

#include <iosfwd>
#include <memory>

namespace ntsim::scenario {

enum ExitStatus : int {
  EXIT_COMPLETE = 0,
  EXIT_CONFIG_ERROR = 1,
  EXIT_INCOMPLETE = 2,
};

sim::NetworkOptions
makeNetworkOptions(const ScenarioConfig& config);

/**
 * @brief One configured simulation: network, tracer and auditor.
 *
 * Construction builds everything (and throws ConfigError on bad input);
 * run() executes; writeOutputs() produces the configured files.
 */
class ScenarioRunner
{
public:
  /// @throw ConfigError
  explicit
  ScenarioRunner(ScenarioConfig config);

  sim::RunReport
  run();

  bool
  isComplete() const;

  /// Writes the trace CSV, metrics CSV and completion JSON lines
  /// (`<metrics-out>.jsonl`) where configured.
  /// @throw trace::IoError
  void
  writeOutputs() const;

  /// Per-consumer progress lines, for incomplete runs.
  void
  writeProgressReport(std::ostream& os) const;

  const ScenarioConfig&
  getConfig() const
  {
    return m_config;
  }

  const ScenarioSpec&
  getSpec() const
  {
    return m_spec;
  }

  sim::Network&
  getNetwork()
  {
    return *m_network;
  }

  const sim::Network&
  getNetwork() const
  {
    return *m_network;
  }

  const trace::RateTracer&
  getTracer() const
  {
    return *m_tracer;
  }

  const sim::InvariantAuditor&
  getAuditor() const
  {
    return *m_auditor;
  }

private:
  ScenarioConfig m_config;
  ScenarioSpec m_spec;
  std::unique_ptr<sim::Network> m_network;
  std::unique_ptr<trace::RateTracer> m_tracer;
  std::unique_ptr<sim::InvariantAuditor> m_auditor;
  bool m_finished = false;
};

/// Full CLI behavior for one config: run, write outputs, report. Returns the exit status.
int
runScenario(const ScenarioConfig& config, std::ostream& out, std::ostream& err);

} // namespace ntsim::scenario

#endif // NTSIM_SCENARIO_RUNNER_HPP
