#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "wsn/packet.hpp"
#include "wsn/sim_time.hpp"
#include "wsn/topology.hpp"

namespace wsn {

struct EnergyAccount {
  double initial_j = 0;
  double remaining_j = 0;
  // Running sum of every charged debit. Kept separately from
  // initial_j - remaining_j so that a recount from the event log (which
  // adds the same debits in the same order) reproduces it bit for bit.
  double consumed = 0;
  std::uint64_t tx_count = 0;
  std::uint64_t rx_count = 0;

  double consumed_j() const { return consumed; }
};

// Network-wide byte counts per sampling interval, feeding Band_util.
class ByteLedger {
 public:
  explicit ByteLedger(double interval_s = 0.1) : interval_s_(interval_s) {}

  void add_out(SimTime t, std::uint64_t bytes) { bucket(out_, t) += bytes; }
  void add_in(SimTime t, std::uint64_t bytes) { bucket(in_, t) += bytes; }

  double interval_s() const { return interval_s_; }
  const std::vector<std::uint64_t>& bytes_in() const { return in_; }
  const std::vector<std::uint64_t>& bytes_out() const { return out_; }
  std::uint64_t total_in() const;
  std::uint64_t total_out() const;

 private:
  std::uint64_t& bucket(std::vector<std::uint64_t>& v, SimTime t);
  double interval_s_;
  std::vector<std::uint64_t> in_, out_;
};

// Per-run counters behind the comparison metrics.
struct MetricsLedger {
  // Indexed by node id.
  std::vector<std::uint64_t> routing_tx;
  std::vector<std::uint64_t> data_tx;

  std::uint64_t p_sent = 0;       // source-generated data packets
  std::uint64_t p_rec = 0;        // consumer receptions incl. duplicates
  std::uint64_t duplicates = 0;
  std::uint64_t unique_delivered = 0;
  std::uint64_t routing_failures = 0;
  std::uint64_t cost_field_setups = 0;  // CBDDP refresh visibility

  std::map<PacketKind, std::uint64_t> tx_by_kind;
  std::set<std::pair<NodeId, std::uint32_t>> seen_at_consumer;

  void resize(int node_count) {
    routing_tx.assign(node_count, 0);
    data_tx.assign(node_count, 0);
  }

  void record_tx(NodeId node, PacketKind kind) {
    ++tx_by_kind[kind];
    if (is_routing_kind(kind)) {
      ++routing_tx[node];
    } else {
      ++data_tx[node];
    }
  }

  void record_consume(NodeId origin, std::uint32_t seq) {
    ++p_rec;
    if (!seen_at_consumer.emplace(origin, seq).second) {
      ++duplicates;
    } else {
      ++unique_delivered;
    }
  }
};

// Structured per-packet event log; rich enough to recompute every metric
// independently of the ledgers.
struct PacketEvent {
  enum class Op { Tx, Rx, Generate, Consume, Drop };
  Op op;
  SimTime time;
  NodeId node = kNoNode;   // acting node
  NodeId peer = kNoNode;   // sender for Rx, addressee for Tx (or kNoNode)
  PacketKind kind = PacketKind::Data;
  NodeId origin = kNoNode;
  std::uint32_t seq = 0;
  std::uint32_t bytes = 0;
  double energy_j = 0;  // debit charged by this event
};

struct PacketLog {
  bool enabled = false;
  std::vector<PacketEvent> events;

  void add(PacketEvent e) {
    if (enabled) events.push_back(e);
  }
};

}  // namespace wsn
