#include "wsn/scenario.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "wsn/table_rows.hpp"

namespace wsn {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ScenarioError("scenario line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& v, int line) {
  try {
    std::size_t used = 0;
    double d = std::stod(v, &used);
    if (used != v.size()) fail(line, "bad number '" + v + "'");
    return d;
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::exception&) {
    fail(line, "bad number '" + v + "'");
  }
}

long to_long(const std::string& v, int line) {
  long out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || p != v.data() + v.size()) {
    fail(line, "bad integer '" + v + "'");
  }
  return out;
}

// `1,2,5` or `1..10` (inclusive range).
std::vector<std::uint64_t> parse_seeds(const std::string& v, int line) {
  std::vector<std::uint64_t> out;
  auto dots = v.find("..");
  if (dots != std::string::npos) {
    long lo = to_long(trim(v.substr(0, dots)), line);
    long hi = to_long(trim(v.substr(dots + 2)), line);
    if (lo < 0 || hi < lo) fail(line, "bad seed range '" + v + "'");
    for (long s = lo; s <= hi; ++s) out.push_back(s);
    return out;
  }
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) fail(line, "empty seed entry");
    long s = to_long(item, line);
    if (s < 0) fail(line, "negative seed");
    out.push_back(s);
  }
  if (out.empty()) fail(line, "empty seed list");
  return out;
}

FaultSpec parse_fault(const std::string& v, int line) {
  auto at = v.find('@');
  if (at == std::string::npos) fail(line, "fault must be NODE@TIME");
  FaultSpec f;
  f.node = static_cast<NodeId>(to_long(trim(v.substr(0, at)), line));
  f.at_s = to_double(trim(v.substr(at + 1)), line);
  if (f.node < 0 || f.at_s < 0) fail(line, "bad fault '" + v + "'");
  return f;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  Scenario sc;
  sc.range = kDefaultRangeM;
  for (std::uint64_t s = 1; s <= 10; ++s) sc.seeds.push_back(s);

  bool have_protocol = false, have_nodes = false;
  bool have_width = false, have_height = false, have_cells = false;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string s = trim(raw);
    if (s.empty()) continue;
    auto eq = s.find('=');
    if (eq == std::string::npos) fail(line, "expected key=value");
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    if (key.empty()) fail(line, "empty key");
    if (value.empty()) fail(line, "empty value for '" + key + "'");

    SimParams& p = sc.params;
    if (key == "protocol") {
      auto proto = parse_protocol(value);
      if (!proto) fail(line, "unknown protocol '" + value + "'");
      p.protocol = *proto;
      have_protocol = true;
    } else if (key == "nodes") {
      long n = to_long(value, line);
      if (n < 2) fail(line, "need at least 2 nodes");
      sc.nodes = static_cast<int>(n);
      have_nodes = true;
    } else if (key == "width") {
      sc.width = to_double(value, line);
      have_width = true;
    } else if (key == "height") {
      sc.height = to_double(value, line);
      have_height = true;
    } else if (key == "range") {
      sc.range = to_double(value, line);
      if (sc.range <= 0) fail(line, "range must be positive");
    } else if (key == "seeds") {
      sc.seeds = parse_seeds(value, line);
    } else if (key == "duration_s") {
      p.duration_s = to_double(value, line);
      if (p.duration_s <= 0) fail(line, "duration must be positive");
    } else if (key == "data_interval_s") {
      p.data_interval_s = to_double(value, line);
      if (p.data_interval_s <= 0) fail(line, "data interval must be positive");
    } else if (key == "fault") {
      p.faults.push_back(parse_fault(value, line));
    } else if (key == "mac.base_latency_s") {
      p.radio.mac.base_latency_s = to_double(value, line);
    } else if (key == "mac.jitter_s") {
      p.radio.mac.jitter_s = to_double(value, line);
    } else if (key == "mac.loss") {
      p.radio.mac.loss = to_double(value, line);
      if (p.radio.mac.loss < 0 || p.radio.mac.loss >= 1) {
        fail(line, "loss must be in [0,1)");
      }
    } else if (key == "energy.initial_j") {
      p.energy.initial_j = to_double(value, line);
    } else if (key == "sizes.data_bytes") {
      p.sizes.data_bytes = static_cast<std::uint32_t>(to_long(value, line));
    } else if (key == "sizes.control_bytes") {
      p.sizes.control_bytes = static_cast<std::uint32_t>(to_long(value, line));
    } else if (key == "fdddp.interest_refresh_s") {
      p.cfg.fdddp.interest_refresh_s = to_double(value, line);
    } else if (key == "fdddp.exploratory_every") {
      p.cfg.fdddp.exploratory_every = static_cast<int>(to_long(value, line));
    } else if (key == "fdddp.repair_timeout_s") {
      p.cfg.fdddp.repair_timeout_s = to_double(value, line);
    } else if (key == "dddp.cells") {
      p.cfg.dddp.cells = static_cast<int>(to_long(value, line));
      have_cells = true;
    } else if (key == "dddp.cell_side_m") {
      p.cfg.dddp.cell_side_m = to_double(value, line);
      have_cells = true;
    } else if (key == "dddp.query_interval_s") {
      p.cfg.dddp.query_interval_s = to_double(value, line);
    } else if (key == "cbddp.beta") {
      p.cfg.cbddp.beta = to_double(value, line);
      if (p.cfg.cbddp.beta < 0) fail(line, "beta must be nonnegative");
    } else if (key == "cbddp.threshold") {
      p.cfg.cbddp.threshold = to_double(value, line);
    } else if (key == "cbddp.refresh_timeout_s") {
      p.cfg.cbddp.refresh_timeout_s = to_double(value, line);
    } else if (key == "eagddp.mu") {
      p.cfg.eagddp.mu = to_double(value, line);
      if (p.cfg.eagddp.mu < 0 || p.cfg.eagddp.mu > 1) {
        fail(line, "mu must be in [0,1]");
      }
    } else if (key == "eagddp.region_side_m") {
      p.cfg.eagddp.region_side_m = to_double(value, line);
    } else if (key == "eagddp.advert_interval_s") {
      p.cfg.eagddp.advert_interval_s = to_double(value, line);
    } else {
      fail(line, "unknown key '" + key + "'");
    }
  }

  if (!have_protocol) throw ScenarioError("scenario: missing 'protocol'");
  if (!have_nodes) throw ScenarioError("scenario: missing 'nodes'");
  if (have_width != have_height) {
    throw ScenarioError("scenario: width and height must be given together");
  }
  if (!have_width) {
    auto row = find_row(sc.nodes);
    if (!row) {
      throw ScenarioError(
          "scenario: nodes=" + std::to_string(sc.nodes) +
          " is not a benchmark row; give explicit width/height");
    }
    sc.width = sc.height = row->side_m;
    if (!have_cells) sc.params.cfg.dddp.cells = row->dddp_cells;
  }
  if (sc.width <= 0 || sc.height <= 0) {
    throw ScenarioError("scenario: dimensions must be positive");
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

}  // namespace wsn
