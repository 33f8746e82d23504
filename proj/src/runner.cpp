#include "wsn/runner.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <tuple>

#include "wsn/table_rows.hpp"

namespace wsn {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

RunResult run_single(const Topology& topo, const SimParams& params,
                     std::uint64_t seed, double wall_budget_s) {
  RunResult r;
  r.protocol = protocol_name(params.protocol);
  r.nodes = topo.size();
  r.seed = seed;
  SimOptions opts;
  opts.wall_budget_s = wall_budget_s;
  Simulation sim(topo, params, seed, opts);
  try {
    sim.run();
    r.metrics = sim.metrics();
  } catch (const RunTimeout&) {
    r.failed = true;
  }
  return r;
}

std::vector<RunResult> run_sweep(const SweepSpec& spec) {
  std::vector<RunResult> out;
  for (int nodes : spec.rows) {
    auto row = find_row(nodes);
    if (!row) {
      throw ScenarioError("sweep: nodes=" + std::to_string(nodes) +
                          " is not a benchmark row");
    }
    for (int s = 1; s <= spec.seed_count; ++s) {
      auto seed = static_cast<std::uint64_t>(s);
      Topology topo = Topology::generate(nodes, row->side_m, row->side_m,
                                         kDefaultRangeM, seed);
      for (Protocol proto : spec.protocols) {
        SimParams params = spec.base;
        params.protocol = proto;
        if (params.cfg.dddp.cells == 0 && params.cfg.dddp.cell_side_m == 0) {
          params.cfg.dddp.cells = row->dddp_cells;
        }
        out.push_back(run_single(topo, params, seed, spec.wall_budget_s));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const RunResult& a, const RunResult& b) {
    return std::tie(a.protocol, a.nodes, a.seed) <
           std::tie(b.protocol, b.nodes, b.seed);
  });
  return out;
}

std::string to_csv(const std::vector<RunResult>& results) {
  std::ostringstream out;
  out << "protocol,nodes,seed,e_avg_j,r_oh,dr,band_util_pct,duplicates,sent,"
         "received\n";
  for (const RunResult& r : results) {
    out << r.protocol << ',' << r.nodes << ',' << r.seed << ',';
    if (r.failed) {
      out << ",,,,,,";  // all metric columns empty
    } else {
      const RunMetrics& m = r.metrics;
      out << fmt_double(m.e_avg_j) << ',' << m.r_oh << ',';
      if (m.dr) out << fmt_double(*m.dr);
      out << ',' << fmt_double(m.band_util_pct) << ',' << m.duplicates << ','
          << m.sent << ',' << m.received;
    }
    out << '\n';
  }
  return out.str();
}

std::vector<RunResult> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ScenarioError("csv: empty input");
  if (line ==
      "protocol,nodes,seed,e_avg_j,r_oh,dr,band_util_pct,duplicates,sent,"
      "received\r") {
    line.pop_back();
  }
  if (line !=
      "protocol,nodes,seed,e_avg_j,r_oh,dr,band_util_pct,duplicates,sent,"
      "received") {
    throw ScenarioError("csv: unexpected header: " + line);
  }
  std::vector<RunResult> out;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cols;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cols.push_back(cell);
    if (line.back() == ',') cols.emplace_back();
    if (cols.size() != 10) {
      throw ScenarioError("csv line " + std::to_string(lineno) +
                          ": expected 10 columns");
    }
    RunResult r;
    r.protocol = cols[0];
    r.nodes = std::stoi(cols[1]);
    r.seed = std::stoull(cols[2]);
    if (cols[3].empty()) {
      r.failed = true;
    } else {
      RunMetrics& m = r.metrics;
      m.e_avg_j = std::stod(cols[3]);
      m.r_oh = std::stoull(cols[4]);
      if (!cols[5].empty()) m.dr = std::stod(cols[5]);
      m.band_util_pct = std::stod(cols[6]);
      m.duplicates = std::stoull(cols[7]);
      m.sent = std::stoull(cols[8]);
      m.received = std::stoull(cols[9]);
      if (m.sent > 0) {
        std::uint64_t unique = m.received - m.duplicates;
        m.unique_delivered = unique;
        m.unique_fraction =
            static_cast<double>(unique) / static_cast<double>(m.sent);
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace wsn
