#include "wsn/cbddp.hpp"

#include <cmath>

namespace wsn {

double remaining_ratio(const CreditHeader& h, double node_cost) {
  if (std::isinf(node_cost)) return -std::numeric_limits<double>::infinity();
  return ((1 + h.beta) * h.cost_source - h.e_current - node_cost) /
         (h.beta * h.cost_source);
}

void CbddpNode::on_start() {
  if (!is_consumer()) return;
  setup_cost_field();
  schedule_timer(cfg_.refresh_timeout_s, "refresh-watchdog",
                 [this] { watchdog(); });
}

void CbddpNode::setup_cost_field() {
  ++epoch_;
  cost_ = 0;
  ++net_.ledger().cost_field_setups;
  advertise();
}

void CbddpNode::advertise() {
  Packet p;
  p.kind = PacketKind::Advertisement;
  p.origin = self_;
  p.seq = advert_seq_++;
  p.size_bytes = net_.sizes().control_bytes;
  p.header = AdvertHeader{epoch_, cost_};
  net_.transmit(self_, p);
}

void CbddpNode::schedule_advert() {
  // Trailing debounce: wait until the cost has been stable for the
  // hold-down window, so one advertisement carries the settled value.
  last_improve_ = net_.engine().now();
  if (advert_pending_) return;
  advert_pending_ = true;
  schedule_timer(cfg_.advert_holdoff_s, "advert-holdoff",
                 [this] { advert_holdoff_fired(); });
}

void CbddpNode::advert_holdoff_fired() {
  SimTime quiet_until =
      last_improve_ + SimTime::from_seconds(cfg_.advert_holdoff_s);
  if (net_.engine().now() < quiet_until) {
    double wait = quiet_until.seconds() - net_.engine().now().seconds();
    schedule_timer(wait, "advert-holdoff",
                   [this] { advert_holdoff_fired(); });
    return;
  }
  advert_pending_ = false;
  advertise();
}

void CbddpNode::watchdog() {
  // Refresh only on a data gap longer than the timeout; a live path through
  // any single working route keeps the field untouched.
  SimTime now = net_.engine().now();
  bool gap =
      !any_data_ ||
      (now - last_data_) > SimTime::from_seconds(cfg_.refresh_timeout_s);
  if (gap && now > SimTime::from_seconds(cfg_.refresh_timeout_s)) {
    setup_cost_field();
  }
  schedule_timer(cfg_.refresh_timeout_s, "refresh-watchdog",
                 [this] { watchdog(); });
}

void CbddpNode::on_data_tick(std::uint32_t seq) {
  if (std::isinf(cost_)) {
    buffer_.push_back(seq);
    while (buffer_.size() > cfg_.buffer_cap) buffer_.pop_front();
    return;
  }
  send_data(seq);
}

void CbddpNode::send_data(std::uint32_t seq) {
  Packet p;
  p.kind = PacketKind::Data;
  p.origin = self_;
  p.seq = seq;
  p.size_bytes = net_.sizes().data_bytes;
  p.header = CreditHeader{cost_, cfg_.beta, 0, cost_, epoch_};
  seen_data_.insert(packet_key(p));
  net_.transmit(self_, p);
}

void CbddpNode::on_packet(NodeId from, const Packet& p) {
  switch (p.kind) {
    case PacketKind::Advertisement: {
      if (is_consumer()) return;
      const auto& h = std::get<AdvertHeader>(p.header);
      if (h.epoch > epoch_) {
        epoch_ = h.epoch;
        cost_ = std::numeric_limits<double>::infinity();
      }
      if (h.epoch != epoch_) return;  // stale epoch
      double w = tx_cost_j(net_.energy_params(), net_.sizes().data_bytes,
                           net_.topology().node_distance(from, self_));
      if (h.cost + w < cost_) {
        cost_ = h.cost + w;
        schedule_advert();
        if (is_source() && !buffer_.empty()) {
          while (!buffer_.empty()) {
            std::uint32_t s = buffer_.front();
            buffer_.pop_front();
            send_data(s);
          }
        }
      }
      return;
    }
    case PacketKind::Data: {
      if (is_consumer()) {
        any_data_ = true;
        last_data_ = net_.engine().now();
        net_.consume(self_, p);  // every arriving copy, duplicates included
        return;
      }
      const auto& h = std::get<CreditHeader>(p.header);
      // Copies are evaluated independently: an infeasible early copy must
      // not block a later one that arrived over a cheaper path. The seen
      // check therefore gates the forward, not the evaluation.
      if (seen_data_.count(packet_key(p)) > 0) return;
      if (std::isinf(cost_)) return;
      if (!(cost_ < h.e_min)) return;  // downhill-only rule
      double w = tx_cost_j(net_.energy_params(), p.size_bytes,
                           net_.topology().node_distance(from, self_));
      CreditHeader fwd_h = h;
      fwd_h.e_current += w;
      bool feasible;
      if (h.beta > 0) {
        feasible = remaining_ratio(fwd_h, cost_) > cfg_.threshold;
      } else {
        // Zero credit collapses to the exact shortest path.
        feasible =
            fwd_h.e_current + cost_ <= h.cost_source * (1 + 1e-9) + 1e-15;
      }
      if (!feasible) return;
      seen_data_.insert(packet_key(p));
      fwd_h.e_min = cost_;
      Packet fwd = p;
      ++fwd.hops;
      fwd.header = fwd_h;
      net_.transmit(self_, fwd);
      return;
    }
    default:
      return;
  }
}

}  // namespace wsn
