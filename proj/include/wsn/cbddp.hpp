#pragma once

#include <deque>
#include <limits>
#include <set>

#include "wsn/protocol.hpp"

namespace wsn {

struct CbddpConfig {
  double beta = 0.5;
  double threshold = 0;
  double refresh_timeout_s = 10;
  // Relaxation hold-down: cost improvements within this window collapse
  // into one advertisement.
  double advert_holdoff_s = 0.5;
  std::size_t buffer_cap = 64;
};

// Remaining credit fraction for a credit header at a node with minimum cost
// `node_cost`: the packet's total budget is (1+beta)*Cost_source; RR is the
// share of the extra credit not yet consumed. Requires beta > 0; an
// infinite node cost yields -inf (never forwards).
double remaining_ratio(const CreditHeader& h, double node_cost);

// Credit Broadcast: consumer-rooted minimum-cost field built by
// advertisement flooding with relaxation; data is broadcast and rebroadcast
// by nodes that are strictly downhill and still within the credit budget.
class CbddpNode : public ProtocolNode {
 public:
  CbddpNode(Network& net, NodeId self, const CbddpConfig& cfg)
      : ProtocolNode(net, self), cfg_(cfg) {}

  void on_start() override;
  void on_data_tick(std::uint32_t seq) override;
  void on_packet(NodeId from, const Packet& packet) override;

  double cost() const { return cost_; }
  std::uint32_t epoch() const { return epoch_; }

 private:
  void setup_cost_field();
  void advertise();
  void schedule_advert();
  void advert_holdoff_fired();
  void send_data(std::uint32_t seq);
  void watchdog();

  CbddpConfig cfg_;
  double cost_ = std::numeric_limits<double>::infinity();
  std::uint32_t epoch_ = 0;
  std::uint32_t advert_seq_ = 0;
  bool advert_pending_ = false;
  SimTime last_improve_;
  std::set<std::uint64_t> seen_data_;

  // Source state.
  std::deque<std::uint32_t> buffer_;

  // Consumer state.
  bool any_data_ = false;
  SimTime last_data_;
};

}  // namespace wsn
