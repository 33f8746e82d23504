#pragma once

#include <map>
#include <string>
#include <vector>

#include "wsn/runner.hpp"

namespace wsn {

struct MetricStats {
  double mean = 0;
  double stddev = 0;
  std::size_t count = 0;
};

// Per-protocol aggregate over all completed runs in the result set.
struct ProtocolSummary {
  std::string protocol;
  MetricStats e_avg, r_oh, dr, band_util, unique_fraction;
  std::size_t failed_runs = 0;
};

struct ComparisonReport {
  std::vector<ProtocolSummary> summaries;  // sorted by protocol name
  // metric name -> protocols ordered best-first.
  std::map<std::string, std::vector<std::string>> rankings;
};

// Aggregates a result set into rankings and pairwise deltas. Every protocol
// must cover the identical (nodes, seed) set; mismatches are refused.
ComparisonReport build_report(const std::vector<RunResult>& results);

// Percentage difference of x relative to y: (x - y) / y * 100.
double pct_delta(double x, double y);

std::string render_report(const ComparisonReport& report);

}  // namespace wsn
