#include "wsn/dddp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wsn {

std::pair<int, int> CellGrid::cell_of(const Point& p) const {
  int c = std::clamp(static_cast<int>(p.x / cell_w), 0, cols - 1);
  int r = std::clamp(static_cast<int>(p.y / cell_h), 0, rows - 1);
  return {r, c};
}

std::pair<int, int> factor_cells(int target) {
  if (target <= 1) return {1, 1};
  int best_r = 1, best_c = target;
  long best_diff = std::numeric_limits<long>::max();
  int best_skew = std::numeric_limits<int>::max();
  for (int r = 1; r <= target; ++r) {
    for (int c : {target / r, target / r + 1}) {
      if (c < 1) continue;
      long diff = std::labs(static_cast<long>(r) * c - target);
      int skew = std::abs(r - c);
      if (diff < best_diff || (diff == best_diff && skew < best_skew)) {
        best_diff = diff;
        best_skew = skew;
        best_r = r;
        best_c = c;
      }
    }
  }
  if (best_r > best_c) std::swap(best_r, best_c);
  return {best_r, best_c};
}

CellGrid make_cell_grid(double width, double height, int target_cells,
                        double cell_side_m) {
  CellGrid g;
  if (cell_side_m > 0) {
    g.cols = std::max(1, static_cast<int>(std::lround(width / cell_side_m)));
    g.rows = std::max(1, static_cast<int>(std::lround(height / cell_side_m)));
  } else {
    auto [r, c] = factor_cells(target_cells);
    g.rows = r;
    g.cols = c;
  }
  g.cell_w = width / g.cols;
  g.cell_h = height / g.rows;
  return g;
}

int default_cells_for(int node_count) {
  switch (node_count) {
    case 20: return 4;
    case 40: return 9;
    case 60: return 12;
    case 80: return 20;
    case 100: return 23;
    case 120: return 28;
    case 140: return 32;
    case 160: return 37;
    default:
      return std::max(1, static_cast<int>(std::lround(node_count / 4.3)));
  }
}

DddpPlan build_dddp_plan(const Topology& topo, const DddpConfig& cfg) {
  DddpPlan plan;
  int target = cfg.cells > 0 ? cfg.cells : default_cells_for(topo.size());
  plan.grid =
      make_cell_grid(topo.width(), topo.height(), target, cfg.cell_side_m);

  auto designate = [&](Point border) {
    NodeId best = kNoNode;
    double best_d = std::numeric_limits<double>::infinity();
    for (NodeId i = 0; i < topo.size(); ++i) {
      double d = distance(topo.position(i), border);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    if (best != kNoNode) {
      plan.border_points.emplace_back(border, best);
      plan.cns.insert(best);
    }
  };

  const auto& g = plan.grid;
  for (int r = 0; r < g.rows; ++r) {
    for (int c = 0; c + 1 < g.cols; ++c) {
      designate({(c + 1) * g.cell_w, (r + 0.5) * g.cell_h});
    }
  }
  for (int r = 0; r + 1 < g.rows; ++r) {
    for (int c = 0; c < g.cols; ++c) {
      designate({(c + 0.5) * g.cell_w, (r + 1) * g.cell_h});
    }
  }
  return plan;
}

void DddpNode::on_start() {
  if (is_consumer()) query_cycle();
}

void DddpNode::query_cycle() {
  bool multi = plan_->grid.cell_count() > 1;
  if (query_seq_ > 0 && !data_since_cycle_ && multi) {
    ring_ = std::min(ring_ + 1,
                     std::max(plan_->grid.rows, plan_->grid.cols));
  }
  data_since_cycle_ = false;
  std::uint32_t q = query_seq_++;

  if (multi) {
    Packet cc;
    cc.kind = PacketKind::CellConstruction;
    cc.origin = self_;
    cc.seq = q;
    cc.size_bytes = net_.sizes().control_bytes;
    seen_.insert(packet_key(cc));
    net_.transmit(self_, cc);
  }

  Packet query;
  query.kind = PacketKind::Query;
  query.origin = self_;
  query.seq = q;
  query.size_bytes = net_.sizes().control_bytes;
  query.header = QueryHeader{ring_};
  seen_.insert(packet_key(query));
  net_.transmit(self_, query);

  schedule_timer(cfg_.query_interval_s, "query-cycle", [this] { query_cycle(); });
}

bool DddpNode::forwards_query(int ring) const {
  if (plan_->is_cn(self_)) return true;
  int dr = std::abs(my_cell_.first - consumer_cell_.first);
  int dc = std::abs(my_cell_.second - consumer_cell_.second);
  return std::max(dr, dc) <= ring;
}

void DddpNode::on_data_tick(std::uint32_t seq) {
  if (route_query_) {
    auto next = reverse_next_.find(*route_query_);
    if (next != reverse_next_.end()) {
      Packet p;
      p.kind = PacketKind::Data;
      p.origin = self_;
      p.seq = seq;
      p.size_bytes = net_.sizes().data_bytes;
      p.addressed = next->second;
      p.header = ReversePathHeader{*route_query_};
      net_.transmit(self_, p);
      return;
    }
  }
  buffer_.push_back(seq);
  while (buffer_.size() > cfg_.buffer_cap) buffer_.pop_front();
}

std::optional<NodeId> DddpNode::reverse_next(std::uint32_t query_seq) const {
  auto it = reverse_next_.find(query_seq);
  if (it == reverse_next_.end()) return std::nullopt;
  return it->second;
}

void DddpNode::on_packet(NodeId from, const Packet& p) {
  switch (p.kind) {
    case PacketKind::CellConstruction: {
      if (is_consumer()) return;
      if (!seen_.insert(packet_key(p)).second) return;
      // Only the consumer's construction packets flood; CN announcements
      // are single broadcasts.
      if (p.origin == net_.topology().consumer()) {
        Packet fwd = p;
        ++fwd.hops;
        net_.transmit(self_, fwd);
        if (plan_->is_cn(self_) && !announced_) {
          announced_ = true;
          Packet ann;
          ann.kind = PacketKind::CellConstruction;
          ann.origin = self_;
          ann.seq = 0;
          ann.size_bytes = net_.sizes().control_bytes;
          seen_.insert(packet_key(ann));
          net_.transmit(self_, ann);
        }
      }
      return;
    }
    case PacketKind::Query: {
      if (is_consumer()) return;
      reverse_next_.emplace(p.seq, from);
      if (is_source() && (!route_query_ || p.seq > *route_query_)) {
        route_query_ = p.seq;
        while (!buffer_.empty()) {
          std::uint32_t s = buffer_.front();
          buffer_.pop_front();
          on_data_tick(s);
        }
      }
      if (!seen_.insert(packet_key(p)).second) return;
      const auto& qh = std::get<QueryHeader>(p.header);
      if (!forwards_query(qh.ring)) return;
      Packet fwd = p;
      ++fwd.hops;
      net_.transmit(self_, fwd);
      return;
    }
    case PacketKind::Data: {
      if (p.addressed != self_) return;
      if (is_consumer()) {
        data_since_cycle_ = true;
        net_.consume(self_, p);
        return;
      }
      const auto& h = std::get<ReversePathHeader>(p.header);
      auto it = reverse_next_.find(h.query_seq);
      if (it == reverse_next_.end()) return;  // no reverse path; drop
      Packet fwd = p;
      ++fwd.hops;
      fwd.addressed = it->second;
      net_.transmit(self_, fwd);
      return;
    }
    default:
      return;
  }
}

}  // namespace wsn
