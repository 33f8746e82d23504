#pragma once

#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "wsn/protocol.hpp"

namespace wsn {

struct EagddpConfig {
  double mu = 0.5;              // weight between geography and consumed energy
  double region_side_m = 0;     // 0 = 2 * radio range, centered on consumer
  double advert_interval_s = 10;
  std::size_t buffer_cap = 64;
  int hop_limit_factor = 4;     // loop guard: drop above factor * node count
  int max_split_depth = 40;
};

// Eq-style estimated cost toward the region centroid: mu * distance +
// (1 - mu) * consumed energy.
double estimated_cost(const Point& neighbor_pos, const Point& centroid,
                      double consumed_energy, double mu);

// Static region oracle: the target region, its members, and nearest-node
// lookups for recursive dissemination.
struct EagddpPlan {
  Rect region;
  std::vector<NodeId> region_nodes;
  const Topology* topo = nullptr;

  std::vector<NodeId> nodes_in(const Rect& r) const;
  // Node inside r nearest to r's centroid; ties go to the lowest id.
  NodeId nearest_to_centroid(const Rect& r) const;
};

EagddpPlan build_eagddp_plan(const Topology& topo, const EagddpConfig& cfg);

// Energy Aware & Geographical Dissemination: greedy next-hop selection on
// learned/estimated costs toward the region, learned-cost updates with
// neighbor advertisement, then recursive quadrant forwarding inside the
// region.
class EagddpNode : public ProtocolNode {
 public:
  EagddpNode(Network& net, NodeId self, const EagddpConfig& cfg,
             std::shared_ptr<const EagddpPlan> plan);

  void on_start() override;
  void on_data_tick(std::uint32_t seq) override;
  void on_packet(NodeId from, const Packet& packet) override;

  std::optional<double> learned_cost() const { return learned_; }
  bool in_region() const { return in_region_; }
  const EagddpPlan& plan() const { return *plan_; }

  // Cost of reaching the region through neighbor `nb` as currently known:
  // advertised learned cost if any, estimated cost otherwise, plus the link
  // term. Public for tests.
  double neighbor_route_cost(NodeId nb) const;

 private:
  void advert_tick();
  void advertise(bool force);
  std::optional<NodeId> select_next_hop() const;
  void route_toward_region(Packet p);
  void enter_region(const Packet& p);
  void disseminate(const Packet& p, const Rect& region, int depth);
  void forward_leg(Packet p, const Rect& region, NodeId target);
  double link_cost(NodeId nb) const;
  double consumed_mj() const;

  EagddpConfig cfg_;
  std::shared_ptr<const EagddpPlan> plan_;
  bool in_region_ = false;

  std::map<NodeId, CostUpdateHeader> nbr_info_;
  std::optional<double> learned_;
  double last_advertised_ = -1;
  std::uint32_t advert_seq_ = 0;
  std::set<std::uint64_t> entered_;  // region entry dedupe per (origin, seq)

  // Source state.
  std::deque<std::uint32_t> buffer_;
};

}  // namespace wsn
