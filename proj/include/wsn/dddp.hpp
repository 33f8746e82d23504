#pragma once

#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "wsn/protocol.hpp"

namespace wsn {

struct DddpConfig {
  int cells = 0;            // target cell count; 0 = Table II default
  double cell_side_m = 0;   // alternative: explicit side length
  double query_interval_s = 8;
  std::size_t buffer_cap = 64;
};

struct CellGrid {
  int rows = 1, cols = 1;
  double cell_w = 0, cell_h = 0;

  int cell_count() const { return rows * cols; }
  std::pair<int, int> cell_of(const Point& p) const;
};

// Factors a target cell count into rows x cols: product closest to the
// target, then as square as possible. Prime targets (23, 37) are treated as
// targets, not exact counts.
std::pair<int, int> factor_cells(int target);

CellGrid make_cell_grid(double width, double height, int target_cells,
                        double cell_side_m = 0);

// Default cell count per deployment size (Table II rows), with a density
// heuristic for custom sizes.
int default_cells_for(int node_count);

// Static cell structure: grid geometry plus centralized-node designations,
// one CN per shared cell edge (node nearest the edge midpoint).
struct DddpPlan {
  CellGrid grid;
  std::set<NodeId> cns;
  std::vector<std::pair<Point, NodeId>> border_points;

  bool is_cn(NodeId id) const { return cns.count(id) > 0; }
};

DddpPlan build_dddp_plan(const Topology& topo, const DddpConfig& cfg);

// Decentralized Dissemination: per query cycle the consumer floods a
// construction packet (cells > 1), then floods the query inside its own
// cell; only CNs forward it beyond. Data returns along the reverse path of
// the query propagation tree.
class DddpNode : public ProtocolNode {
 public:
  DddpNode(Network& net, NodeId self, const DddpConfig& cfg,
           std::shared_ptr<const DddpPlan> plan)
      : ProtocolNode(net, self), cfg_(cfg), plan_(std::move(plan)) {
    my_cell_ = plan_->grid.cell_of(own_position());
    consumer_cell_ =
        plan_->grid.cell_of(net.topology().position(net.topology().consumer()));
  }

  void on_start() override;
  void on_data_tick(std::uint32_t seq) override;
  void on_packet(NodeId from, const Packet& packet) override;

  const DddpPlan& plan() const { return *plan_; }
  std::optional<NodeId> reverse_next(std::uint32_t query_seq) const;
  int escalation_ring() const { return ring_; }

 private:
  void query_cycle();
  bool forwards_query(int ring) const;

  DddpConfig cfg_;
  std::shared_ptr<const DddpPlan> plan_;
  std::pair<int, int> my_cell_, consumer_cell_;

  std::set<std::uint64_t> seen_;
  std::map<std::uint32_t, NodeId> reverse_next_;
  bool announced_ = false;

  // Consumer state.
  std::uint32_t query_seq_ = 0;
  int ring_ = 0;
  bool data_since_cycle_ = false;

  // Source state.
  std::optional<std::uint32_t> route_query_;
  std::deque<std::uint32_t> buffer_;
};

}  // namespace wsn
