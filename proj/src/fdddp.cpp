#include "wsn/fdddp.hpp"

#include <sstream>

namespace wsn {

void FdddpNode::on_start() {
  if (!is_consumer()) return;
  send_interest();
}

void FdddpNode::send_interest() {
  ++interest_seq_;
  Packet p;
  p.kind = PacketKind::Interest;
  p.origin = self_;
  p.seq = interest_seq_;
  p.size_bytes = net_.sizes().control_bytes;
  seen_.insert(packet_key(p));
  net_.transmit(self_, p);
  schedule_timer(cfg_.interest_refresh_s, "interest-refresh",
                 [this] { send_interest(); });
}

void FdddpNode::send_probe(PacketKind kind, std::uint32_t seq) {
  Packet p;
  p.kind = kind;
  p.origin = self_;
  p.seq = seq;
  p.size_bytes = net_.sizes().control_bytes;
  seen_.insert(packet_key(p));
  if (kind == PacketKind::Repair) ++repair_probes_sent_;
  net_.transmit(self_, p);
}

void FdddpNode::on_data_tick(std::uint32_t seq) {
  if (route_ready_ && downstream_) {
    forward_data(seq);
    if (cfg_.exploratory_every > 0 && seq > 0 &&
        seq % static_cast<std::uint32_t>(cfg_.exploratory_every) == 0) {
      send_probe(PacketKind::Exploratory, probe_seq_++);
    }
    return;
  }
  buffer_.push_back(seq);
  while (buffer_.size() > cfg_.buffer_cap) buffer_.pop_front();
  if (!gradients_.empty()) {
    send_probe(PacketKind::Exploratory, probe_seq_++);
  }
}

void FdddpNode::forward_data(std::uint32_t seq) {
  Packet p;
  p.kind = PacketKind::Data;
  p.origin = net_.topology().source();
  p.seq = seq;
  p.size_bytes = net_.sizes().data_bytes;
  p.addressed = *downstream_;
  net_.transmit(self_, p);
  if (!check_pending_) {
    check_pending_ = true;
    NodeId expected = *downstream_;
    SimTime at = net_.engine().now();
    schedule_timer(cfg_.repair_timeout_s, "repair-check",
                   [this, expected, at] { check_downstream(expected, at); });
  }
}

void FdddpNode::check_downstream(NodeId expected, SimTime forwarded_at) {
  check_pending_ = false;
  if (!downstream_ || *downstream_ != expected) return;
  auto it = last_heard_.find(expected);
  if (it != last_heard_.end() && it->second > forwarded_at) return;

  // Downstream silent. Probe alternates, if any.
  bool has_alternate = false;
  for (NodeId g : gradients_) {
    if (g != expected) {
      has_alternate = true;
      break;
    }
  }
  if (!has_alternate || repair_outstanding_) return;
  repair_outstanding_ = true;
  send_probe(PacketKind::Repair, repair_seq_++);
  schedule_timer(2 * cfg_.repair_timeout_s, "repair-retry-window",
                 [this] { repair_outstanding_ = false; });
}

void FdddpNode::handle_probe(NodeId from, const Packet& p) {
  std::uint64_t key = packet_key(p);
  if (is_consumer()) {
    if (first_sender_.emplace(key, from).second) {
      Packet r;
      r.kind = PacketKind::Reinforcement;
      r.origin = self_;
      r.seq = p.seq;
      r.size_bytes = net_.sizes().control_bytes;
      r.addressed = from;
      r.header = ReinforceHeader{p.kind, p.origin, p.seq};
      net_.transmit(self_, r);
    }
    return;
  }
  if (!seen_.insert(key).second) return;
  first_sender_.emplace(key, from);
  if (gradients_.empty()) return;
  Packet fwd = p;
  ++fwd.hops;
  net_.transmit(self_, fwd);
}

void FdddpNode::handle_reinforcement(NodeId from, const Packet& p) {
  const auto& ref = std::get<ReinforceHeader>(p.header);
  downstream_ = from;
  if (ref.ref_origin == self_) {
    // Our own probe came back reinforced: path is live.
    repair_outstanding_ = false;
    if (is_source()) {
      route_ready_ = true;
      while (!buffer_.empty()) {
        std::uint32_t s = buffer_.front();
        buffer_.pop_front();
        forward_data(s);
      }
    }
    return;
  }
  auto it = first_sender_.find(packet_key(ref.ref_kind, ref.ref_origin,
                                          ref.ref_seq));
  if (it == first_sender_.end()) return;
  Packet fwd = p;
  ++fwd.hops;
  fwd.addressed = it->second;
  net_.transmit(self_, fwd);
}

void FdddpNode::on_packet(NodeId from, const Packet& p) {
  last_heard_[from] = net_.engine().now();

  switch (p.kind) {
    case PacketKind::Interest: {
      if (is_consumer()) return;
      if (!have_interest_ || p.seq > current_interest_) {
        have_interest_ = true;
        current_interest_ = p.seq;
        gradients_.clear();
      }
      if (p.seq != current_interest_) return;  // stale flood copy
      gradients_.insert(from);
      std::uint64_t key = packet_key(p);
      if (seen_.insert(key).second) {
        Packet fwd = p;
        ++fwd.hops;
        net_.transmit(self_, fwd);
      }
      return;
    }
    case PacketKind::Exploratory:
    case PacketKind::Repair:
      handle_probe(from, p);
      return;
    case PacketKind::Reinforcement:
      if (p.addressed != self_) return;
      handle_reinforcement(from, p);
      return;
    case PacketKind::Data: {
      if (p.addressed != self_) return;
      if (is_consumer()) {
        net_.consume(self_, p);
        return;
      }
      if (downstream_) {
        Packet fwd = p;
        ++fwd.hops;
        fwd.addressed = *downstream_;
        net_.transmit(self_, fwd);
        if (!check_pending_) {
          check_pending_ = true;
          NodeId expected = *downstream_;
          SimTime at = net_.engine().now();
          schedule_timer(cfg_.repair_timeout_s, "repair-check",
                         [this, expected, at] {
                           check_downstream(expected, at);
                         });
        }
      }
      return;
    }
    default:
      return;
  }
}

std::string FdddpNode::state_dump() const {
  std::ostringstream out;
  out << "node " << self_ << " interest "
      << (have_interest_ ? static_cast<int>(current_interest_) : -1)
      << " gradients";
  if (gradients_.empty()) out << " -";
  for (NodeId g : gradients_) out << ' ' << g;
  out << " reinforced " << (downstream_ ? *downstream_ : kNoNode);
  return out.str();
}

}  // namespace wsn
