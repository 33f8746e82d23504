#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wsn/cbddp.hpp"
#include "wsn/dddp.hpp"
#include "wsn/eagddp.hpp"
#include "wsn/fdddp.hpp"
#include "wsn/metrics.hpp"
#include "wsn/network.hpp"

namespace wsn {

enum class Protocol { Fdddp, Dddp, Cbddp, Eagddp };

const char* protocol_name(Protocol p);
std::optional<Protocol> parse_protocol(const std::string& name);

struct ProtocolConfigs {
  FdddpConfig fdddp;
  DddpConfig dddp;
  CbddpConfig cbddp;
  EagddpConfig eagddp;
};

struct FaultSpec {
  NodeId node = kNoNode;
  double at_s = 0;
};

struct SimParams {
  Protocol protocol = Protocol::Fdddp;
  double duration_s = 500;
  double data_interval_s = 2;
  RadioParams radio;
  EnergyParams energy;
  PacketSizes sizes;
  ProtocolConfigs cfg;
  std::vector<FaultSpec> faults;
};

struct SimOptions {
  bool engine_trace = false;
  bool packet_log = false;
  double wall_budget_s = 0;  // 0 = unlimited
};

// One protocol run over a fixed topology: builds the engine, network and
// per-node protocol instances, schedules startup, the source's data ticks
// and any fault injections, then drives the event loop to the horizon.
class Simulation {
 public:
  Simulation(const Topology& topo, const SimParams& params, std::uint64_t seed,
             const SimOptions& opts = {});

  // Runs to the configured duration. Propagates RunTimeout if the wall
  // budget is exceeded.
  void run();

  Engine& engine() { return engine_; }
  Network& network() { return net_; }
  const Network& network() const { return net_; }
  const SimParams& params() const { return params_; }
  ProtocolNode& node(NodeId id) { return *nodes_[id]; }

  template <typename T>
  T& node_as(NodeId id) {
    return dynamic_cast<T&>(*nodes_[id]);
  }

  RunMetrics metrics() const {
    return compute_metrics(net_, params_.duration_s);
  }

 private:
  SimParams params_;
  Engine engine_;
  Network net_;
  std::vector<std::unique_ptr<ProtocolNode>> nodes_;
};

}  // namespace wsn
