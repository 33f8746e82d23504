#pragma once

#include <string>
#include <vector>

#include "wsn/scenario.hpp"

namespace wsn {

struct RunResult {
  std::string protocol;
  int nodes = 0;
  std::uint64_t seed = 0;
  bool failed = false;  // exceeded the wall budget
  RunMetrics metrics;
};

// Executes one protocol run over a pre-built topology. A wall-budget
// overrun is recorded as a failed result, never dropped.
RunResult run_single(const Topology& topo, const SimParams& params,
                     std::uint64_t seed, double wall_budget_s = 60);

struct SweepSpec {
  std::vector<int> rows;            // benchmark node counts
  std::vector<Protocol> protocols;
  int seed_count = 10;              // seeds 1..N
  SimParams base;                   // shared parameters; protocol is per-run
  double wall_budget_s = 60;
};

// For every (row, seed) the identical topology is fed to every protocol.
// Results come back sorted by (protocol, nodes, seed).
std::vector<RunResult> run_sweep(const SweepSpec& spec);

// CSV schema:
// protocol,nodes,seed,e_avg_j,r_oh,dr,band_util_pct,duplicates,sent,received
std::string to_csv(const std::vector<RunResult>& results);
std::vector<RunResult> parse_csv(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace wsn
