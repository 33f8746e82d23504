#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "wsn/simulation.hpp"

namespace wsn {

struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A parsed experiment description: protocol, deployment geometry, seed set
// and all engine/protocol parameters.
struct Scenario {
  int nodes = 0;
  double width = 0, height = 0;
  double range = 0;
  std::vector<std::uint64_t> seeds;  // default {1..10}
  SimParams params;

  Topology make_topology(std::uint64_t seed) const {
    return Topology::generate(nodes, width, height, range, seed);
  }
};

// Flat `key=value` format, `#` starts a comment. Unknown keys and malformed
// values fail with the offending line number. Benchmark-row node counts
// auto-fill the square dimensions (and the DDDP cell count).
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

}  // namespace wsn
