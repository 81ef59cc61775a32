/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#include "ntorrent-sim/scenario/runner.hpp"

#include <fstream>
#include <ostream>

namespace ntsim::scenario {

sim::NetworkOptions
makeNetworkOptions(const ScenarioConfig& config)
{
  sim::NetworkOptions options;
  options.strategy = config.strategy;
  options.torrent = config.torrent;
  options.seed = config.seed;
  options.forwarder.csEnabled = !config.disableCache;
  options.consumer.strictPhaseBarrier = config.strictPhaseBarrier;
  return options;
}

ScenarioRunner::ScenarioRunner(ScenarioConfig config)
  : m_config(std::move(config))
  , m_spec(resolveScenario(m_config))
  , m_network(std::make_unique<sim::Network>(makeNetworkOptions(m_config)))
{
  buildNetwork(m_spec, *m_network);
  m_tracer = std::make_unique<trace::RateTracer>(*m_network, m_config.traceInterval);
  m_auditor = std::make_unique<sim::InvariantAuditor>(*m_network);
}

sim::RunReport
ScenarioRunner::run()
{
  auto report = m_network->run(m_config.maxSimTime);
  m_tracer->finish(m_network->now());
  m_auditor->finish(*m_network);
  m_finished = true;
  return report;
}

bool
ScenarioRunner::isComplete() const
{
  return m_finished && m_network->allConsumersComplete() && !m_network->hasFailure();
}

void
ScenarioRunner::writeOutputs() const
{
  if (!m_config.traceOut.empty()) {
    trace::RateTracer::writeCsv(m_tracer->getSamples(), m_config.traceOut);
  }
  if (!m_config.metricsOut.empty()) {
    auto rows = trace::summarize(*m_network);
    std::ofstream os(m_config.metricsOut, std::ios::binary);
    if (!os) {
      throw trace::IoError("cannot write " + m_config.metricsOut);
    }
    trace::writeMetricsCsv(rows, os);

    std::string jsonPath = m_config.metricsOut + ".jsonl";
    std::ofstream js(jsonPath, std::ios::binary);
    if (!js) {
      throw trace::IoError("cannot write " + jsonPath);
    }
    trace::writeCompletionJsonLines(rows, js);
    if (!os || !js) {
      throw trace::IoError("write failed for " + m_config.metricsOut);
    }
  }
}

void
ScenarioRunner::writeProgressReport(std::ostream& os) const
{
  const auto& bundle = torrent::buildTorrent(m_config.torrent);
  for (NodeId id : m_network->getConsumerNodes()) {
    const auto* consumer = m_network->getConsumer(id);
    os << m_network->getNode(id).name << ": "
       << "segments " << consumer->getSegments().size() << "/" << bundle.segments.size()
       << ", manifests " << consumer->getManifests().size() << "/" << bundle.manifests.size()
       << ", packets " << consumer->getPackets().size() << "/" << bundle.packets.size()
       << ", outstanding " << consumer->getOutstanding().size();
    if (consumer->isCompleted()) {
      os << ", complete at " << formatMilliseconds(*consumer->getFinishTime()) << " ms";
    }
    else if (consumer->hasFailed()) {
      os << ", failed";
    }
    else if (!consumer->getStartTime()) {
      os << ", not started";
    }
    os << "\n";
  }
  for (const auto& failure : m_network->getFailures()) {
    os << "failure: " << failure << "\n";
  }
  for (const auto& violation : m_auditor->getViolations()) {
    os << "invariant violation: " << violation << "\n";
  }
}

int
runScenario(const ScenarioConfig& config, std::ostream& out, std::ostream& err)
{
  std::unique_ptr<ScenarioRunner> runner;
  try {
    runner = std::make_unique<ScenarioRunner>(config);
  }
  catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return EXIT_CONFIG_ERROR;
  }
  catch (const torrent::InvalidParams& e) {
    err << "error: " << e.what() << "\n";
    return EXIT_CONFIG_ERROR;
  }

  if (config.verbose) {
    runner->getNetwork().setEventLog(&out);
  }
  auto report = runner->run();

  try {
    runner->writeOutputs();
  }
  catch (const trace::IoError& e) {
    err << "error: " << e.what() << "\n";
    return EXIT_CONFIG_ERROR;
  }
  if (config.dumpTables) {
    trace::writeTableDump(runner->getNetwork(), out);
  }

  if (!runner->isComplete()) {
    err << "incomplete at " << formatMilliseconds(report.endTime) << " ms";
    if (report.hitTimeLimit) {
      err << " (max simulation time reached)";
    }
    err << "\n";
    runner->writeProgressReport(err);
    return EXIT_INCOMPLETE;
  }
  if (config.verbose) {
    runner->writeProgressReport(out);
  }
  return EXIT_COMPLETE;
}

} // namespace ntsim::scenario
