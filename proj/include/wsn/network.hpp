#pragma once

#include <functional>
#include <vector>

#include "wsn/engine.hpp"
#include "wsn/ledger.hpp"
#include "wsn/packet.hpp"
#include "wsn/rng.hpp"
#include "wsn/topology.hpp"

namespace wsn {

// Abstract CSMA-style MAC: fixed base latency plus uniform jitter, optional
// independent loss. No carrier sense or backoff state machine; every
// protocol runs over the same parameters.
struct MacParams {
  double base_latency_s = 0.002;
  double jitter_s = 0.002;
  double loss = 0.0;
};

// First-order radio model: tx = E_elec*k + eps_amp*k*d^2, rx = E_elec*k.
struct EnergyParams {
  double e_elec_j_per_bit = 50e-9;
  double eps_amp_j_per_bit_m2 = 100e-12;
  double initial_j = 2.0;
};

struct PacketSizes {
  std::uint32_t data_bytes = 64;
  std::uint32_t control_bytes = 36;
};

struct RadioParams {
  double carrier_mhz = 954;      // recorded metadata, no behavioral effect
  double antenna_height_m = 1.9;
  MacParams mac;
};

double tx_cost_j(const EnergyParams& ep, std::uint32_t bytes, double dist_m);
double rx_cost_j(const EnergyParams& ep, std::uint32_t bytes);

// Shared substrate: disc radio, abstract MAC, per-node energy accounts and
// the run ledgers. Protocol callbacks hang off delivery events.
class Network {
 public:
  using DeliveryHandler =
      std::function<void(NodeId receiver, NodeId sender, const Packet&)>;

  Network(Engine& engine, const Topology& topo, const RadioParams& radio,
          const EnergyParams& energy, const PacketSizes& sizes,
          std::uint64_t seed);

  // Broadcasts a frame; packet.addressed names the unicast destination, if
  // any. Every live in-range node gets a delivery event (overhearing); the
  // sender pays tx cost, receivers pay rx cost on delivery.
  void transmit(NodeId sender, const Packet& packet);

  void set_delivery_handler(DeliveryHandler h) { on_deliver_ = std::move(h); }

  Engine& engine() { return engine_; }
  const Topology& topology() const { return topo_; }
  const PacketSizes& sizes() const { return sizes_; }
  const EnergyParams& energy_params() const { return energy_params_; }

  bool alive(NodeId id) const {
    return !killed_[id] && accounts_[id].remaining_j > 0;
  }
  void kill(NodeId id) { killed_[id] = true; }
  const EnergyAccount& account(NodeId id) const { return accounts_[id]; }
  const std::vector<EnergyAccount>& accounts() const { return accounts_; }

  MetricsLedger& ledger() { return ledger_; }
  const MetricsLedger& ledger() const { return ledger_; }
  ByteLedger& byte_ledger() { return bytes_; }
  const ByteLedger& byte_ledger() const { return bytes_; }
  PacketLog& log() { return log_; }
  const PacketLog& log() const { return log_; }

  // Ledger entry points used by the protocol layer.
  void note_generated(NodeId source, std::uint32_t seq);
  void consume(NodeId consumer, const Packet& packet);
  void note_routing_failure() { ++ledger_.routing_failures; }

 private:
  double debit(NodeId id, double cost);

  Engine& engine_;
  const Topology& topo_;
  RadioParams radio_;
  EnergyParams energy_params_;
  PacketSizes sizes_;
  std::vector<EnergyAccount> accounts_;
  std::vector<bool> killed_;
  MetricsLedger ledger_;
  ByteLedger bytes_;
  PacketLog log_;
  RngStream mac_rng_;
  RngStream loss_rng_;
  DeliveryHandler on_deliver_;
};

}  // namespace wsn
