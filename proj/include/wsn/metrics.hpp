#pragma once

#include <optional>

#include "wsn/network.hpp"

namespace wsn {

inline constexpr double kDefaultNSpeedBitPerS = 2e6;

struct RunMetrics {
  double e_avg_j = 0;
  std::uint64_t r_oh = 0;
  std::optional<double> dr;  // absent when nothing was generated
  double band_util_pct = 0;
  std::uint64_t duplicates = 0;
  std::uint64_t sent = 0;
  std::uint64_t received = 0;
  std::uint64_t unique_delivered = 0;
  // Fraction of generated packets that reached the consumer at least once.
  double unique_fraction = 0;
};

// Mean consumed energy (initial - final) over all deployed nodes.
double avg_energy(const std::vector<EnergyAccount>& accounts);

// Total routing (non-data) packet transmissions across all nodes.
std::uint64_t routing_overhead(const MetricsLedger& ledger);

// Consumer receptions (duplicates included) over source generations.
std::optional<double> delivery_ratio(const MetricsLedger& ledger);

// Per sampling cycle: max(bytes_in, bytes_out) * 8 * 100 / (interval_s *
// n_speed); run value is the mean over the cycles covering [0, duration).
double bandwidth_utilization(const ByteLedger& bytes, double n_speed_bit_s,
                             double duration_s);

RunMetrics compute_metrics(const Network& net, double duration_s,
                           double n_speed_bit_s = kDefaultNSpeedBitPerS);

// Independent recount of every metric from the raw packet log. Requires the
// log to have been enabled for the run; used as a cross-check oracle.
RunMetrics recount_from_log(const PacketLog& log, int node_count,
                            NodeId consumer, double duration_s,
                            double interval_s = 0.1,
                            double n_speed_bit_s = kDefaultNSpeedBitPerS);

}  // namespace wsn
