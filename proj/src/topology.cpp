#include "wsn/topology.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "wsn/rng.hpp"

namespace wsn {

Topology::Topology(double width, double height, double range,
                   std::vector<Point> positions, NodeId source, NodeId consumer)
    : width_(width),
      height_(height),
      range_(range),
      positions_(std::move(positions)),
      source_(source),
      consumer_(consumer) {
  build_neighbors();
}

Topology Topology::generate(int count, double width, double height,
                            double range, std::uint64_t seed) {
  RngStream rng(seed, "placement");
  std::vector<Point> pts;
  pts.reserve(count);
  for (int i = 0; i < count; ++i) {
    double x = rng.uniform(0, width);
    double y = rng.uniform(0, height);
    pts.push_back({x, y});
  }
  NodeId src = kNoNode, con = kNoNode;
  double best_src = std::numeric_limits<double>::infinity();
  double best_con = std::numeric_limits<double>::infinity();
  for (int i = 0; i < count; ++i) {
    double ds = distance(pts[i], {0, 0});
    double dc = distance(pts[i], {width, height});
    if (ds < best_src) {
      best_src = ds;
      src = i;
    }
    if (dc < best_con) {
      best_con = dc;
      con = i;
    }
  }
  if (count >= 2 && src == con) {
    // Degenerate single cluster: give the consumer the second-best node.
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < count; ++i) {
      if (i == src) continue;
      double dc = distance(pts[i], {width, height});
      if (dc < best) {
        best = dc;
        con = i;
      }
    }
  }
  return Topology(width, height, range, std::move(pts), src, con);
}

bool Topology::are_neighbors(NodeId a, NodeId b) const {
  return a != b && node_distance(a, b) <= range_;
}

void Topology::build_neighbors() {
  int n = size();
  neighbors_.assign(n, {});
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      if (node_distance(a, b) <= range_) {
        neighbors_[a].push_back(b);
        neighbors_[b].push_back(a);
      }
    }
  }
}

std::string Topology::dump() const {
  std::ostringstream out;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g %d %d\n", width_, height_,
                range_, source_, consumer_);
  out << buf;
  for (int i = 0; i < size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%d %.17g %.17g\n", i, positions_[i].x,
                  positions_[i].y);
    out << buf;
  }
  return out.str();
}

Topology Topology::load(const std::string& text) {
  std::istringstream in(text);
  double w, h, r;
  int src, con;
  if (!(in >> w >> h >> r >> src >> con)) {
    throw std::runtime_error("topology: bad header");
  }
  std::vector<Point> pts;
  int id;
  double x, y;
  while (in >> id >> x >> y) {
    if (id != static_cast<int>(pts.size())) {
      throw std::runtime_error("topology: node ids must be dense and ordered");
    }
    pts.push_back({x, y});
  }
  return Topology(w, h, r, std::move(pts), src, con);
}

double sninda(int count, double area_m2, double range) {
  if (area_m2 <= 0) throw std::invalid_argument("sninda: area must be > 0");
  return count * std::numbers::pi * range * range / area_m2;
}

}  // namespace wsn
