#include "wsn/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace wsn {

double avg_energy(const std::vector<EnergyAccount>& accounts) {
  if (accounts.empty()) return 0;
  double total = 0;
  for (const auto& a : accounts) total += a.consumed_j();
  return total / static_cast<double>(accounts.size());
}

std::uint64_t routing_overhead(const MetricsLedger& ledger) {
  std::uint64_t total = 0;
  for (std::uint64_t t : ledger.routing_tx) total += t;
  return total;
}

std::optional<double> delivery_ratio(const MetricsLedger& ledger) {
  if (ledger.p_sent == 0) return std::nullopt;
  return static_cast<double>(ledger.p_rec) /
         static_cast<double>(ledger.p_sent);
}

namespace {

double band_util_mean(const std::vector<std::uint64_t>& in,
                      const std::vector<std::uint64_t>& out,
                      double interval_s, double n_speed_bit_s,
                      double duration_s) {
  if (interval_s <= 0 || n_speed_bit_s <= 0) return 0;
  auto cycles = static_cast<std::size_t>(std::floor(duration_s / interval_s));
  if (cycles == 0) return 0;
  double sum = 0;
  for (std::size_t i = 0; i < cycles; ++i) {
    std::uint64_t bi = i < in.size() ? in[i] : 0;
    std::uint64_t bo = i < out.size() ? out[i] : 0;
    double peak = static_cast<double>(std::max(bi, bo));
    sum += peak * 8 * 100 / (interval_s * n_speed_bit_s);
  }
  return sum / static_cast<double>(cycles);
}

}  // namespace

double bandwidth_utilization(const ByteLedger& bytes, double n_speed_bit_s,
                             double duration_s) {
  return band_util_mean(bytes.bytes_in(), bytes.bytes_out(),
                        bytes.interval_s(), n_speed_bit_s, duration_s);
}

RunMetrics compute_metrics(const Network& net, double duration_s,
                           double n_speed_bit_s) {
  const MetricsLedger& l = net.ledger();
  RunMetrics m;
  m.e_avg_j = avg_energy(net.accounts());
  m.r_oh = routing_overhead(l);
  m.dr = delivery_ratio(l);
  m.band_util_pct =
      bandwidth_utilization(net.byte_ledger(), n_speed_bit_s, duration_s);
  m.duplicates = l.duplicates;
  m.sent = l.p_sent;
  m.received = l.p_rec;
  m.unique_delivered = l.unique_delivered;
  m.unique_fraction =
      l.p_sent == 0 ? 0
                    : static_cast<double>(l.unique_delivered) /
                          static_cast<double>(l.p_sent);
  return m;
}

RunMetrics recount_from_log(const PacketLog& log, int node_count,
                            NodeId consumer, double duration_s,
                            double interval_s, double n_speed_bit_s) {
  (void)consumer;
  RunMetrics m;
  // Per-node accumulation in event order mirrors the live energy accounts
  // exactly, including floating-point rounding.
  std::vector<double> consumed(node_count > 0 ? node_count : 0, 0.0);
  std::set<std::pair<NodeId, std::uint32_t>> seen;
  std::vector<std::uint64_t> in, out;
  auto bucket = [&](std::vector<std::uint64_t>& v, SimTime t) ->
      std::uint64_t& {
    auto i = static_cast<std::size_t>(t.seconds() / interval_s);
    if (v.size() <= i) v.resize(i + 1, 0);
    return v[i];
  };
  for (const PacketEvent& e : log.events) {
    switch (e.op) {
      case PacketEvent::Op::Tx:
        consumed[e.node] += e.energy_j;
        if (is_routing_kind(e.kind)) ++m.r_oh;
        bucket(out, e.time) += e.bytes;
        break;
      case PacketEvent::Op::Rx:
        consumed[e.node] += e.energy_j;
        bucket(in, e.time) += e.bytes;
        break;
      case PacketEvent::Op::Generate:
        ++m.sent;
        break;
      case PacketEvent::Op::Consume:
        ++m.received;
        if (seen.emplace(e.origin, e.seq).second) {
          ++m.unique_delivered;
        } else {
          ++m.duplicates;
        }
        break;
      case PacketEvent::Op::Drop:
        break;
    }
  }
  double consumed_total = 0;
  for (double c : consumed) consumed_total += c;
  m.e_avg_j = node_count > 0 ? consumed_total / node_count : 0;
  if (m.sent > 0) {
    m.dr = static_cast<double>(m.received) / static_cast<double>(m.sent);
    m.unique_fraction = static_cast<double>(m.unique_delivered) /
                        static_cast<double>(m.sent);
  }
  m.band_util_pct =
      band_util_mean(in, out, interval_s, n_speed_bit_s, duration_s);
  return m;
}

}  // namespace wsn
