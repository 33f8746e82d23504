#include "wsn/simulation.hpp"

namespace wsn {

const char* protocol_name(Protocol p) {
  switch (p) {
    case Protocol::Fdddp: return "fdddp";
    case Protocol::Dddp: return "dddp";
    case Protocol::Cbddp: return "cbddp";
    case Protocol::Eagddp: return "eagddp";
  }
  return "?";
}

std::optional<Protocol> parse_protocol(const std::string& name) {
  if (name == "fdddp") return Protocol::Fdddp;
  if (name == "dddp") return Protocol::Dddp;
  if (name == "cbddp") return Protocol::Cbddp;
  if (name == "eagddp") return Protocol::Eagddp;
  return std::nullopt;
}

Simulation::Simulation(const Topology& topo, const SimParams& params,
                       std::uint64_t seed, const SimOptions& opts)
    : params_(params),
      net_(engine_, topo, params.radio, params.energy, params.sizes, seed) {
  engine_.set_trace_enabled(opts.engine_trace);
  net_.log().enabled = opts.packet_log;
  if (opts.wall_budget_s > 0) engine_.set_wall_deadline(opts.wall_budget_s);

  nodes_.reserve(topo.size());
  switch (params_.protocol) {
    case Protocol::Fdddp:
      for (NodeId i = 0; i < topo.size(); ++i) {
        nodes_.push_back(
            std::make_unique<FdddpNode>(net_, i, params_.cfg.fdddp));
      }
      break;
    case Protocol::Dddp: {
      auto plan = std::make_shared<const DddpPlan>(
          build_dddp_plan(topo, params_.cfg.dddp));
      for (NodeId i = 0; i < topo.size(); ++i) {
        nodes_.push_back(
            std::make_unique<DddpNode>(net_, i, params_.cfg.dddp, plan));
      }
      break;
    }
    case Protocol::Cbddp:
      for (NodeId i = 0; i < topo.size(); ++i) {
        nodes_.push_back(
            std::make_unique<CbddpNode>(net_, i, params_.cfg.cbddp));
      }
      break;
    case Protocol::Eagddp: {
      auto plan = std::make_shared<const EagddpPlan>(
          build_eagddp_plan(topo, params_.cfg.eagddp));
      for (NodeId i = 0; i < topo.size(); ++i) {
        nodes_.push_back(
            std::make_unique<EagddpNode>(net_, i, params_.cfg.eagddp, plan));
      }
      break;
    }
  }

  net_.set_delivery_handler(
      [this](NodeId receiver, NodeId sender, const Packet& p) {
        nodes_[receiver]->on_packet(sender, p);
      });

  // Startup callbacks first so t=0 initialization precedes the first tick.
  for (NodeId i = 0; i < topo.size(); ++i) {
    engine_.schedule(SimTime::zero(), i, "start",
                     [this, i] { nodes_[i]->on_start(); });
  }

  NodeId source = topo.source();
  std::uint32_t seq = 0;
  for (double t = 0; t < params_.duration_s;
       t += params_.data_interval_s, ++seq) {
    engine_.schedule(SimTime::from_seconds(t), source, "data-tick",
                     [this, source, seq] {
                       if (!net_.alive(source)) return;
                       net_.note_generated(source, seq);
                       nodes_[source]->on_data_tick(seq);
                     });
  }

  for (const FaultSpec& f : params_.faults) {
    engine_.schedule(SimTime::from_seconds(f.at_s), f.node, "fault-kill",
                     [this, f] { net_.kill(f.node); });
  }
}

void Simulation::run() {
  engine_.run_until(SimTime::from_seconds(params_.duration_s));
}

}  // namespace wsn
