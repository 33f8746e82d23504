#pragma once

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "wsn/protocol.hpp"

namespace wsn {

struct FdddpConfig {
  double interest_refresh_s = 30;
  int exploratory_every = 10;  // one probe wave per this many data packets
  double repair_timeout_s = 6; // 3x the 2 s data interval
  std::size_t buffer_cap = 64;
};

// Forwarding Diffusion: interest flooding installs gradients, exploratory
// probes discover paths, the consumer reinforces the earliest-arriving one,
// and forwarders repair locally by probing alternate gradients when the
// reinforced downstream goes silent.
class FdddpNode : public ProtocolNode {
 public:
  FdddpNode(Network& net, NodeId self, const FdddpConfig& cfg)
      : ProtocolNode(net, self), cfg_(cfg) {}

  void on_start() override;
  void on_data_tick(std::uint32_t seq) override;
  void on_packet(NodeId from, const Packet& packet) override;

  const std::set<NodeId>& gradients() const { return gradients_; }
  std::optional<NodeId> reinforced_downstream() const { return downstream_; }
  std::uint64_t repair_probes_sent() const { return repair_probes_sent_; }

  // Gradient table as text, for path-shape assertions.
  std::string state_dump() const;

 private:
  void send_interest();
  void send_probe(PacketKind kind, std::uint32_t seq);
  void forward_data(std::uint32_t seq);
  void check_downstream(NodeId expected, SimTime forwarded_at);
  void handle_probe(NodeId from, const Packet& p);
  void handle_reinforcement(NodeId from, const Packet& p);

  FdddpConfig cfg_;

  std::set<std::uint64_t> seen_;
  std::map<std::uint64_t, NodeId> first_sender_;
  std::map<NodeId, SimTime> last_heard_;

  std::uint32_t current_interest_ = 0;
  bool have_interest_ = false;
  std::set<NodeId> gradients_;
  std::optional<NodeId> downstream_;  // reinforced next hop toward consumer

  // Consumer state.
  std::uint32_t interest_seq_ = 0;

  // Source state.
  std::deque<std::uint32_t> buffer_;
  bool route_ready_ = false;
  std::uint32_t probe_seq_ = 0;
  bool probe_outstanding_ = false;

  // Repair state.
  std::uint32_t repair_seq_ = 0;
  bool repair_outstanding_ = false;
  std::uint64_t repair_probes_sent_ = 0;
  bool check_pending_ = false;
};

}  // namespace wsn
