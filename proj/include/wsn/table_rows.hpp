#pragma once

#include <array>
#include <optional>

namespace wsn {

inline constexpr double kDefaultRangeM = 271.3;

// Benchmark deployment rows: node count and square side length, sized to
// keep the expected neighborhood (~40 nodes) constant across densities.
struct TopologyRow {
  int nodes;
  double side_m;
  int dddp_cells;
};

inline constexpr std::array<TopologyRow, 8> kTopologyRows = {{
    {20, 340, 4},
    {40, 511, 9},
    {60, 626, 12},
    {80, 713, 20},
    {100, 810, 23},
    {120, 886, 28},
    {140, 911, 32},
    {160, 994, 37},
}};

inline std::optional<TopologyRow> find_row(int nodes) {
  for (const TopologyRow& r : kTopologyRows) {
    if (r.nodes == nodes) return r;
  }
  return std::nullopt;
}

}  // namespace wsn
