#include "wsn/eagddp.hpp"

#include <cmath>
#include <limits>

namespace wsn {

double estimated_cost(const Point& neighbor_pos, const Point& centroid,
                      double consumed_energy, double mu) {
  return mu * distance(neighbor_pos, centroid) + (1 - mu) * consumed_energy;
}

std::vector<NodeId> EagddpPlan::nodes_in(const Rect& r) const {
  std::vector<NodeId> out;
  for (NodeId i = 0; i < topo->size(); ++i) {
    const Point& p = topo->position(i);
    if (p.x >= r.x0 && p.x < r.x1 && p.y >= r.y0 && p.y < r.y1) {
      out.push_back(i);
    }
  }
  return out;
}

NodeId EagddpPlan::nearest_to_centroid(const Rect& r) const {
  Point c = r.centroid();
  NodeId best = kNoNode;
  double best_d = std::numeric_limits<double>::infinity();
  for (NodeId i : nodes_in(r)) {
    double d = distance(topo->position(i), c);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

EagddpPlan build_eagddp_plan(const Topology& topo, const EagddpConfig& cfg) {
  EagddpPlan plan;
  plan.topo = &topo;
  double side = cfg.region_side_m > 0 ? cfg.region_side_m : 2 * topo.range();
  Point c = topo.consumer() != kNoNode ? topo.position(topo.consumer())
                                       : Point{topo.width() / 2,
                                               topo.height() / 2};
  // Tiny outward skew so nodes sitting exactly on the outer edge stay in
  // the half-open quadrant decomposition.
  plan.region = {c.x - side / 2, c.y - side / 2, c.x + side / 2 + 1e-9,
                 c.y + side / 2 + 1e-9};
  plan.region_nodes = plan.nodes_in(plan.region);
  return plan;
}

EagddpNode::EagddpNode(Network& net, NodeId self, const EagddpConfig& cfg,
                       std::shared_ptr<const EagddpPlan> plan)
    : ProtocolNode(net, self), cfg_(cfg), plan_(std::move(plan)) {
  const Point& p = own_position();
  in_region_ = p.x >= plan_->region.x0 && p.x < plan_->region.x1 &&
               p.y >= plan_->region.y0 && p.y < plan_->region.y1;
}

double EagddpNode::consumed_mj() const {
  return net_.account(self_).consumed_j() * 1e3;
}

void EagddpNode::on_start() {
  if (in_region_) learned_ = 0;
  advert_tick();
}

void EagddpNode::advert_tick() {
  advertise(true);
  schedule_timer(cfg_.advert_interval_s, "advert", [this] { advert_tick(); });
}

void EagddpNode::advertise(bool force) {
  if (!force && learned_ &&
      std::abs(*learned_ - last_advertised_) <=
          1e-6 * std::max(1.0, std::abs(last_advertised_))) {
    return;
  }
  Packet p;
  p.kind = PacketKind::CostUpdate;
  p.origin = self_;
  p.seq = advert_seq_++;
  p.size_bytes = net_.sizes().control_bytes;
  CostUpdateHeader h;
  h.pos = own_position();
  h.consumed_mj = consumed_mj();
  h.has_learned = learned_.has_value();
  h.learned = learned_.value_or(0);
  p.header = h;
  if (learned_) last_advertised_ = *learned_;
  net_.transmit(self_, p);
}

double EagddpNode::link_cost(NodeId nb) const {
  double tx_mj = tx_cost_j(net_.energy_params(), net_.sizes().data_bytes,
                           net_.topology().node_distance(self_, nb)) *
                 1e3;
  auto it = nbr_info_.find(nb);
  double nb_consumed = it != nbr_info_.end() ? it->second.consumed_mj : 0;
  return tx_mj + (1 - cfg_.mu) * nb_consumed;
}

double EagddpNode::neighbor_route_cost(NodeId nb) const {
  const auto& info = nbr_info_.at(nb);
  double base = info.has_learned
                    ? info.learned
                    : estimated_cost(info.pos, plan_->region.centroid(),
                                     info.consumed_mj, cfg_.mu);
  return base + link_cost(nb);
}

std::optional<NodeId> EagddpNode::select_next_hop() const {
  std::optional<NodeId> best;
  double best_score = std::numeric_limits<double>::infinity();
  for (const auto& [nb, info] : nbr_info_) {
    double score = neighbor_route_cost(nb);
    if (score < best_score) {
      best_score = score;
      best = nb;
    }
  }
  return best;
}

void EagddpNode::on_data_tick(std::uint32_t seq) {
  Packet p;
  p.kind = PacketKind::Data;
  p.origin = self_;
  p.seq = seq;
  p.size_bytes = net_.sizes().data_bytes;
  p.header = GeoHeader{GeoHeader::Stage::ToRegion, {}, kNoNode};
  if (in_region_) {
    enter_region(p);
    return;
  }
  if (nbr_info_.empty()) {
    buffer_.push_back(seq);
    while (buffer_.size() > cfg_.buffer_cap) buffer_.pop_front();
    return;
  }
  route_toward_region(p);
}

void EagddpNode::route_toward_region(Packet p) {
  if (p.hops > static_cast<std::uint32_t>(cfg_.hop_limit_factor) *
                   static_cast<std::uint32_t>(net_.topology().size())) {
    net_.note_routing_failure();
    return;
  }
  auto next = select_next_hop();
  if (!next) {
    net_.note_routing_failure();
    return;
  }
  double l = neighbor_route_cost(*next);
  if (!learned_ || std::abs(*learned_ - l) > 1e-12) {
    learned_ = l;
    advertise(false);
  }
  ++p.hops;
  p.addressed = *next;
  net_.transmit(self_, p);
}

void EagddpNode::enter_region(const Packet& p) {
  if (!entered_.insert(packet_key(PacketKind::Data, p.origin, p.seq)).second) return;
  if (is_consumer()) net_.consume(self_, p);
  disseminate(p, plan_->region, 0);
}

void EagddpNode::disseminate(const Packet& p, const Rect& region, int depth) {
  if (depth > cfg_.max_split_depth) return;
  Point c = region.centroid();
  const Rect quads[4] = {
      {region.x0, region.y0, c.x, c.y},
      {c.x, region.y0, region.x1, c.y},
      {region.x0, c.y, c.x, region.y1},
      {c.x, c.y, region.x1, region.y1},
  };
  for (const Rect& quad : quads) {
    auto members = plan_->nodes_in(quad);
    if (members.empty()) continue;
    NodeId target = plan_->nearest_to_centroid(quad);
    if (target == self_) {
      if (members.size() > 1) disseminate(p, quad, depth + 1);
      continue;
    }
    forward_leg(p, quad, target);
  }
}

void EagddpNode::forward_leg(Packet p, const Rect& region, NodeId target) {
  p.header = GeoHeader{GeoHeader::Stage::Dissem, region, target};
  ++p.hops;
  if (net_.topology().are_neighbors(self_, target)) {
    p.addressed = target;
    net_.transmit(self_, p);
    return;
  }
  // Greedy relay toward the target's position; require strict progress.
  const Point& tpos = net_.topology().position(target);
  double own_d = distance(own_position(), tpos);
  NodeId best = kNoNode;
  double best_d = own_d;
  for (NodeId nb : net_.topology().neighbors_of(self_)) {
    double d = distance(net_.topology().position(nb), tpos);
    if (d < best_d) {
      best_d = d;
      best = nb;
    }
  }
  if (best == kNoNode) {
    net_.note_routing_failure();
    return;
  }
  p.addressed = best;
  net_.transmit(self_, p);
}

void EagddpNode::on_packet(NodeId from, const Packet& p) {
  (void)from;
  switch (p.kind) {
    case PacketKind::CostUpdate: {
      nbr_info_[p.origin] = std::get<CostUpdateHeader>(p.header);
      if (is_source() && !buffer_.empty() && !nbr_info_.empty()) {
        std::deque<std::uint32_t> pending;
        pending.swap(buffer_);
        for (std::uint32_t s : pending) on_data_tick(s);
      }
      return;
    }
    case PacketKind::Data: {
      if (p.addressed != self_) return;
      const auto& h = std::get<GeoHeader>(p.header);
      if (h.stage == GeoHeader::Stage::ToRegion) {
        if (in_region_) {
          enter_region(p);
        } else {
          route_toward_region(p);
        }
        return;
      }
      if (h.leg_target == self_) {
        if (is_consumer()) net_.consume(self_, p);
        if (entered_.insert(packet_key(PacketKind::Data, p.origin, p.seq)).second) {
          disseminate(p, h.region, 0);
        }
        return;
      }
      // Relay leg: keep moving toward the leg target.
      if (p.hops > static_cast<std::uint32_t>(cfg_.hop_limit_factor) *
                       static_cast<std::uint32_t>(net_.topology().size())) {
        net_.note_routing_failure();
        return;
      }
      forward_leg(p, h.region, h.leg_target);
      return;
    }
    default:
      return;
  }
}

}  // namespace wsn
