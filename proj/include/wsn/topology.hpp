#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wsn/geometry.hpp"

namespace wsn {

using NodeId = int;
inline constexpr NodeId kNoNode = -1;

// Immutable node layout plus the derived neighbor graph (disc radio model).
class Topology {
 public:
  Topology() = default;
  Topology(double width, double height, double range,
           std::vector<Point> positions, NodeId source, NodeId consumer);

  // Places `count` nodes i.i.d. uniform over the rectangle using the
  // `placement` stream of `seed`. Source/consumer are the nodes nearest the
  // (0,0) and (width,height) corners.
  static Topology generate(int count, double width, double height,
                           double range, std::uint64_t seed);

  int size() const { return static_cast<int>(positions_.size()); }
  double width() const { return width_; }
  double height() const { return height_; }
  double range() const { return range_; }
  NodeId source() const { return source_; }
  NodeId consumer() const { return consumer_; }
  const Point& position(NodeId id) const { return positions_[id]; }
  const std::vector<Point>& positions() const { return positions_; }

  const std::vector<NodeId>& neighbors_of(NodeId id) const {
    return neighbors_[id];
  }
  double node_distance(NodeId a, NodeId b) const {
    return distance(positions_[a], positions_[b]);
  }
  bool are_neighbors(NodeId a, NodeId b) const;

  // Text format: header `width height range source consumer`, then one
  // `id x y` line per node.
  std::string dump() const;
  static Topology load(const std::string& text);

 private:
  void build_neighbors();

  double width_ = 0, height_ = 0, range_ = 0;
  std::vector<Point> positions_;
  NodeId source_ = kNoNode;
  NodeId consumer_ = kNoNode;
  std::vector<std::vector<NodeId>> neighbors_;
};

// Expected neighborhood size for `count` nodes over area `area_m2` at radio
// radius `range`: count * pi * range^2 / area.
double sninda(int count, double area_m2, double range);

}  // namespace wsn
