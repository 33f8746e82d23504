#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wsn/report.hpp"
#include "wsn/runner.hpp"
#include "wsn/table_rows.hpp"

namespace fs = std::filesystem;

namespace {

bool verbose() {
  const char* v = std::getenv("WSNSIM_VERBOSE");
  return v && *v && std::string(v) != "0";
}

std::vector<int> parse_rows(const std::string& arg) {
  std::vector<int> rows;
  if (arg == "all") {
    for (const auto& r : wsn::kTopologyRows) rows.push_back(r.nodes);
    return rows;
  }
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    rows.push_back(std::stoi(item));
  }
  if (rows.empty()) throw CLI::ValidationError("--rows", "empty row list");
  return rows;
}

std::vector<wsn::Protocol> parse_protocols(const std::string& arg) {
  std::vector<wsn::Protocol> out;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto p = wsn::parse_protocol(item);
    if (!p) {
      throw CLI::ValidationError("--protocols", "unknown protocol: " + item);
    }
    out.push_back(*p);
  }
  if (out.empty()) {
    throw CLI::ValidationError("--protocols", "empty protocol list");
  }
  return out;
}

int cmd_simulate(const std::string& scenario_path, long seed_override,
                 const std::string& trace_path) {
  wsn::Scenario sc = wsn::load_scenario(scenario_path);
  std::vector<std::uint64_t> seeds = sc.seeds;
  if (seed_override >= 0) {
    seeds = {static_cast<std::uint64_t>(seed_override)};
  }
  if (!trace_path.empty() && seeds.size() != 1) {
    std::cerr << "--trace requires exactly one seed\n";
    return 2;
  }
  std::vector<wsn::RunResult> results;
  bool any_failed = false;
  for (std::uint64_t seed : seeds) {
    if (verbose()) std::cerr << "run seed " << seed << "\n";
    wsn::Topology topo = sc.make_topology(seed);
    wsn::SimOptions opts;
    opts.wall_budget_s = 60;
    opts.engine_trace = !trace_path.empty();
    wsn::Simulation sim(topo, sc.params, seed, opts);
    wsn::RunResult r;
    r.protocol = wsn::protocol_name(sc.params.protocol);
    r.nodes = topo.size();
    r.seed = seed;
    try {
      sim.run();
      r.metrics = sim.metrics();
    } catch (const wsn::RunTimeout&) {
      r.failed = true;
      any_failed = true;
    }
    if (!trace_path.empty()) {
      wsn::write_file(trace_path, wsn::format_trace(sim.engine().trace()));
    }
    results.push_back(std::move(r));
  }
  std::cout << wsn::to_csv(results);
  return any_failed ? 1 : 0;
}

int cmd_sweep(const std::string& rows_arg, const std::string& protocols_arg,
              int seeds, const std::string& out_dir) {
  wsn::SweepSpec spec;
  spec.rows = parse_rows(rows_arg);
  spec.protocols = parse_protocols(protocols_arg);
  spec.seed_count = seeds;
  auto results = wsn::run_sweep(spec);
  fs::create_directories(out_dir);
  wsn::write_file((fs::path(out_dir) / "results.csv").string(),
                  wsn::to_csv(results));
  bool any_failed = false;
  for (const auto& r : results) any_failed |= r.failed;
  if (verbose()) {
    std::cerr << results.size() << " runs written to " << out_dir << "\n";
  }
  return any_failed ? 1 : 0;
}

int cmd_report(const std::string& in_dir, const std::string& out_path) {
  std::vector<wsn::RunResult> all;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(in_dir)) {
    if (entry.path().extension() == ".csv") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    std::cerr << "no .csv files in " << in_dir << "\n";
    return 2;
  }
  for (const auto& f : files) {
    auto part = wsn::parse_csv(wsn::read_file(f.string()));
    all.insert(all.end(), part.begin(), part.end());
  }
  auto rep = wsn::build_report(all);
  wsn::write_file(out_path, wsn::render_report(rep));
  return 0;
}

int cmd_dump_topology(int nodes, long seed, double width, double height,
                      double range) {
  if (width <= 0 || height <= 0) {
    auto row = wsn::find_row(nodes);
    if (!row) {
      std::cerr << "nodes=" << nodes
                << " is not a benchmark row; pass --width/--height\n";
      return 2;
    }
    width = height = row->side_m;
  }
  wsn::Topology topo = wsn::Topology::generate(
      nodes, width, height, range, static_cast<std::uint64_t>(seed));
  std::cout << topo.dump();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wireless sensor network data-dissemination simulator"};
  app.require_subcommand(1);

  std::string scenario_path, trace_path;
  long seed = -1;
  auto* simulate = app.add_subcommand("simulate", "Run one scenario");
  simulate->add_option("--scenario", scenario_path, "Scenario file")
      ->required();
  simulate->add_option("--seed", seed, "Override the scenario seed list");
  simulate->add_option("--trace", trace_path, "Write the event trace here");

  std::string rows_arg = "all", protocols_arg = "fdddp,dddp,cbddp,eagddp";
  int seeds = 10;
  std::string out_dir;
  auto* sweep = app.add_subcommand("sweep", "Benchmark sweep");
  sweep->add_option("--rows", rows_arg, "all or comma list of node counts");
  sweep->add_option("--protocols", protocols_arg, "Comma list of protocols");
  sweep->add_option("--seeds", seeds, "Seeds 1..N per cell");
  sweep->add_option("--out", out_dir, "Output directory")->required();

  std::string in_dir, report_out = "report.txt";
  auto* report = app.add_subcommand("report", "Comparison report from CSVs");
  report->add_option("--in", in_dir, "Directory of result CSVs")->required();
  report->add_option("--out", report_out, "Report output path");

  int dump_nodes = 0;
  long dump_seed = 1;
  double dump_w = 0, dump_h = 0, dump_range = wsn::kDefaultRangeM;
  auto* dump = app.add_subcommand("dump-topology", "Print a generated layout");
  dump->add_option("--nodes", dump_nodes, "Node count")->required();
  dump->add_option("--seed", dump_seed, "Placement seed");
  dump->add_option("--width", dump_w, "Area width (m)");
  dump->add_option("--height", dump_h, "Area height (m)");
  dump->add_option("--range", dump_range, "Radio range (m)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) {
      return cmd_simulate(scenario_path, seed, trace_path);
    }
    if (sweep->parsed()) {
      return cmd_sweep(rows_arg, protocols_arg, seeds, out_dir);
    }
    if (report->parsed()) return cmd_report(in_dir, report_out);
    if (dump->parsed()) {
      return cmd_dump_topology(dump_nodes, dump_seed, dump_w, dump_h,
                               dump_range);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
