#include "wsn/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace wsn {

namespace {

MetricStats stats_of(const std::vector<double>& xs) {
  MetricStats s;
  s.count = xs.size();
  if (xs.empty()) return s;
  double sum = 0;
  for (double x : xs) sum += x;
  s.mean = sum / xs.size();
  double var = 0;
  for (double x : xs) var += (x - s.mean) * (x - s.mean);
  s.stddev = xs.size() > 1 ? std::sqrt(var / (xs.size() - 1)) : 0;
  return s;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

void rank(ComparisonReport& rep, const std::string& metric,
          double (*get)(const ProtocolSummary&), bool ascending) {
  std::vector<std::string> order;
  std::vector<const ProtocolSummary*> ps;
  for (const auto& s : rep.summaries) ps.push_back(&s);
  std::stable_sort(ps.begin(), ps.end(),
                   [&](const ProtocolSummary* a, const ProtocolSummary* b) {
                     double va = get(*a), vb = get(*b);
                     return ascending ? va < vb : va > vb;
                   });
  for (const auto* p : ps) order.push_back(p->protocol);
  rep.rankings[metric] = std::move(order);
}

}  // namespace

double pct_delta(double x, double y) { return (x - y) / y * 100; }

ComparisonReport build_report(const std::vector<RunResult>& results) {
  // Check topology/seed coverage parity before aggregating anything.
  std::map<std::string, std::set<std::pair<int, std::uint64_t>>> coverage;
  for (const RunResult& r : results) {
    coverage[r.protocol].emplace(r.nodes, r.seed);
  }
  if (coverage.empty()) throw std::runtime_error("report: no results");
  const auto& ref = coverage.begin()->second;
  for (const auto& [proto, cov] : coverage) {
    if (cov != ref) {
      throw std::runtime_error(
          "report: protocol '" + proto +
          "' does not cover the same (nodes, seed) set as '" +
          coverage.begin()->first + "'; refusing to compare");
    }
  }

  ComparisonReport rep;
  for (const auto& [proto, cov] : coverage) {
    (void)cov;
    ProtocolSummary s;
    s.protocol = proto;
    std::vector<double> e, roh, dr, bu, uf;
    for (const RunResult& r : results) {
      if (r.protocol != proto) continue;
      if (r.failed) {
        ++s.failed_runs;
        continue;
      }
      e.push_back(r.metrics.e_avg_j);
      roh.push_back(static_cast<double>(r.metrics.r_oh));
      if (r.metrics.dr) dr.push_back(*r.metrics.dr);
      bu.push_back(r.metrics.band_util_pct);
      uf.push_back(r.metrics.unique_fraction);
    }
    s.e_avg = stats_of(e);
    s.r_oh = stats_of(roh);
    s.dr = stats_of(dr);
    s.band_util = stats_of(bu);
    s.unique_fraction = stats_of(uf);
    rep.summaries.push_back(std::move(s));
  }

  rank(rep, "energy", [](const ProtocolSummary& s) { return s.e_avg.mean; },
       true);
  rank(rep, "routing_overhead",
       [](const ProtocolSummary& s) { return s.r_oh.mean; }, true);
  rank(rep, "delivery",
       [](const ProtocolSummary& s) { return s.unique_fraction.mean; }, false);
  rank(rep, "bandwidth",
       [](const ProtocolSummary& s) { return s.band_util.mean; }, true);
  return rep;
}

std::string render_report(const ComparisonReport& rep) {
  std::ostringstream out;
  out << "Protocol comparison report\n";
  out << "==========================\n\n";

  out << "Per-protocol means (mean +/- stddev over runs)\n";
  for (const auto& s : rep.summaries) {
    out << "  " << s.protocol << ":\n";
    out << "    e_avg_j:       " << fmt(s.e_avg.mean) << " +/- "
        << fmt(s.e_avg.stddev) << "  (n=" << s.e_avg.count << ")\n";
    out << "    r_oh:          " << fmt(s.r_oh.mean) << " +/- "
        << fmt(s.r_oh.stddev) << "\n";
    out << "    dr:            " << fmt(s.dr.mean) << " +/- "
        << fmt(s.dr.stddev) << "\n";
    out << "    unique_frac:   " << fmt(s.unique_fraction.mean) << " +/- "
        << fmt(s.unique_fraction.stddev) << "\n";
    out << "    band_util_pct: " << fmt(s.band_util.mean) << " +/- "
        << fmt(s.band_util.stddev) << "\n";
    if (s.failed_runs > 0) {
      out << "    FAILED RUNS:   " << s.failed_runs << "\n";
    }
  }

  struct MetricRow {
    const char* label;
    const char* key;
    double (*get)(const ProtocolSummary&);
    const char* smaller_word;
  };
  const MetricRow rows[] = {
      {"Routing overhead", "routing_overhead",
       [](const ProtocolSummary& s) { return s.r_oh.mean; }, "smaller"},
      {"Delivery (unique fraction)", "delivery",
       [](const ProtocolSummary& s) { return s.unique_fraction.mean; },
       "lower"},
      {"Energy", "energy",
       [](const ProtocolSummary& s) { return s.e_avg.mean; }, "smaller"},
      {"Bandwidth utilization", "bandwidth",
       [](const ProtocolSummary& s) { return s.band_util.mean; }, "smaller"},
  };

  out << "\nRankings (best first)\n";
  for (const auto& row : rows) {
    auto it = rep.rankings.find(row.key);
    if (it == rep.rankings.end()) continue;
    out << "  " << row.label << ": ";
    for (std::size_t i = 0; i < it->second.size(); ++i) {
      if (i) out << ", ";
      out << it->second[i];
    }
    out << "\n";
  }

  auto find_summary = [&](const std::string& p) -> const ProtocolSummary& {
    for (const auto& s : rep.summaries) {
      if (s.protocol == p) return s;
    }
    throw std::runtime_error("report: missing summary for " + p);
  };

  if (rep.summaries.size() >= 2) {
    out << "\nPairwise deltas ((X - Y) / Y * 100)\n";
    for (const auto& row : rows) {
      out << "  " << row.label << ":\n";
      for (const auto& x : rep.summaries) {
        for (const auto& y : rep.summaries) {
          if (x.protocol == y.protocol) continue;
          double vx = row.get(x), vy = row.get(y);
          if (vy == 0) continue;
          double d = pct_delta(vx, vy);
          out << "    " << x.protocol << " vs " << y.protocol << ": ";
          if (d == 0) {
            out << "tie (0%)\n";
          } else {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.1f", std::fabs(d));
            out << buf << "% " << (d < 0 ? row.smaller_word : "larger")
                << "\n";
          }
        }
      }
    }

    out << "\nSummary grid (best / worst per metric)\n";
    for (const auto& row : rows) {
      const auto& order = rep.rankings.at(row.key);
      const auto& best = find_summary(order.front());
      const auto& worst = find_summary(order.back());
      out << "  " << row.label << ": best " << best.protocol << " ("
          << fmt(row.get(best)) << "), worst " << worst.protocol << " ("
          << fmt(row.get(worst)) << ")\n";
    }
  }
  return out.str();
}

}  // namespace wsn
