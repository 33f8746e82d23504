#include "doctest.h"

#include <cmath>
#include <set>

#include "wsn/network.hpp"
#include "wsn/table_rows.hpp"

using namespace wsn;

namespace {

Topology line_topology(int count, double spacing, double range) {
  std::vector<Point> pts;
  for (int i = 0; i < count; ++i) pts.push_back({i * spacing, 0});
  return Topology((count - 1) * spacing, 1, range, std::move(pts), 0,
                  count - 1);
}

}  // namespace

TEST_CASE("generated placements stay inside the area and are reproducible") {
  Topology t1 = Topology::generate(20, 340, 340, kDefaultRangeM, 1);
  Topology t2 = Topology::generate(20, 340, 340, kDefaultRangeM, 1);
  Topology t3 = Topology::generate(20, 340, 340, kDefaultRangeM, 2);
  REQUIRE(t1.size() == 20);
  bool in_bounds = true;
  for (int i = 0; i < t1.size(); ++i) {
    const Point& p = t1.position(i);
    in_bounds = in_bounds && p.x >= 0 && p.x < 340 && p.y >= 0 && p.y < 340;
  }
  CHECK(in_bounds);
  CHECK(t1.dump() == t2.dump());
  CHECK(t1.dump() != t3.dump());
  CHECK(t1.source() != t1.consumer());
}

TEST_CASE("expected neighborhood size formula") {
  CHECK(sninda(20, 340.0 * 340, 271.3) == doctest::Approx(40.0).epsilon(0.01));
  CHECK(sninda(100, 810.0 * 810, 271.3) ==
        doctest::Approx(35.2).epsilon(0.01));
  CHECK(sninda(50, 1000, 0) == 0);
  CHECK_THROWS_AS(sninda(10, 0, 100), std::invalid_argument);
}

TEST_CASE("neighbor relation matches brute force and is symmetric") {
  Topology t = Topology::generate(100, 810, 810, kDefaultRangeM, 3);
  for (NodeId a = 0; a < t.size(); ++a) {
    std::set<NodeId> from_list(t.neighbors_of(a).begin(),
                               t.neighbors_of(a).end());
    for (NodeId b = 0; b < t.size(); ++b) {
      bool expected = a != b && t.node_distance(a, b) <= t.range();
      CHECK(from_list.count(b) == (expected ? 1u : 0u));
      CHECK(t.are_neighbors(a, b) == t.are_neighbors(b, a));
    }
  }
}

TEST_CASE("boundary distances") {
  std::vector<Point> pts = {{0, 0}, {0, 250}, {0, 500}};
  Topology t(600, 600, 271.3, std::move(pts), 0, 2);
  CHECK(t.are_neighbors(0, 1));        // 250 <= 271.3
  CHECK(t.are_neighbors(1, 2));        // 250 <= 271.3
  CHECK_FALSE(t.are_neighbors(0, 2));  // 500 > 271.3
  CHECK_FALSE(t.are_neighbors(1, 1));  // irreflexive
}

TEST_CASE("mean degree across seeds sits in the expected band") {
  for (auto row : {kTopologyRows[0], kTopologyRows[4]}) {
    double degree_sum = 0;
    long samples = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      Topology t = Topology::generate(row.nodes, row.side_m, row.side_m,
                                      kDefaultRangeM, seed);
      for (NodeId i = 0; i < t.size(); ++i) {
        degree_sum += static_cast<double>(t.neighbors_of(i).size());
        ++samples;
      }
    }
    double mean = degree_sum / samples;
    // Border effects shave the in-disc estimate down (the radius is a
    // large fraction of the side), but never below a third of it.
    double expect = sninda(row.nodes, row.side_m * row.side_m, kDefaultRangeM);
    CHECK(mean >= expect / 3);
    CHECK(mean <= expect);
  }
}

TEST_CASE("topology text roundtrip") {
  Topology t = Topology::generate(40, 511, 511, kDefaultRangeM, 5);
  Topology back = Topology::load(t.dump());
  CHECK(back.dump() == t.dump());
  CHECK(back.source() == t.source());
  CHECK(back.consumer() == t.consumer());
  CHECK(back.size() == 40);
  CHECK_THROWS(Topology::load("not a topology"));
}

TEST_CASE("radio energy model") {
  EnergyParams ep;
  // 1000 bytes = 8000 bits over 100 m.
  CHECK(tx_cost_j(ep, 1000, 100) == doctest::Approx(0.0084).epsilon(1e-12));
  CHECK(tx_cost_j(ep, 1000, 0) == doctest::Approx(0.0004).epsilon(1e-12));
  CHECK(rx_cost_j(ep, 1000) == doctest::Approx(0.0004).epsilon(1e-12));
}

TEST_CASE("broadcast reaches every live neighbor once") {
  Engine eng;
  Topology topo = line_topology(4, 200, 271.3);  // only adjacent are in range
  Network net(eng, topo, RadioParams{}, EnergyParams{}, PacketSizes{}, 1);
  std::vector<std::pair<NodeId, NodeId>> deliveries;
  net.set_delivery_handler([&](NodeId r, NodeId s, const Packet&) {
    deliveries.emplace_back(r, s);
  });
  Packet p;
  p.kind = PacketKind::Data;
  p.origin = 1;
  p.size_bytes = 64;
  net.transmit(1, p);
  eng.run_until(SimTime::from_seconds(1));
  REQUIRE(deliveries.size() == 2);  // nodes 0 and 2
  std::set<NodeId> receivers;
  for (auto& [r, s] : deliveries) {
    receivers.insert(r);
    CHECK(s == 1);
  }
  CHECK(receivers == std::set<NodeId>{0, 2});
  CHECK(net.account(1).tx_count == 1);
  CHECK(net.account(0).rx_count == 1);
}

TEST_CASE("unicast to a non-neighbor is dropped as a routing failure") {
  Engine eng;
  Topology topo = line_topology(3, 200, 271.3);
  Network net(eng, topo, RadioParams{}, EnergyParams{}, PacketSizes{}, 1);
  Packet p;
  p.kind = PacketKind::Data;
  p.origin = 0;
  p.size_bytes = 64;
  p.addressed = 2;  // 400 m away
  double before = net.account(0).remaining_j;
  net.transmit(0, p);
  eng.run_until(SimTime::from_seconds(1));
  CHECK(net.ledger().routing_failures == 1);
  CHECK(net.account(0).remaining_j == before);  // nothing was sent
}

TEST_CASE("certain loss still debits the transmitter") {
  Engine eng;
  Topology topo = line_topology(2, 100, 271.3);
  RadioParams radio;
  radio.mac.loss = 0.999999999;  // loss must stay below 1 in scenarios
  Network net(eng, topo, radio, EnergyParams{}, PacketSizes{}, 1);
  int delivered = 0;
  net.set_delivery_handler(
      [&](NodeId, NodeId, const Packet&) { ++delivered; });
  Packet p;
  p.kind = PacketKind::Data;
  p.size_bytes = 64;
  for (int i = 0; i < 50; ++i) net.transmit(0, p);
  eng.run_until(SimTime::from_seconds(1));
  CHECK(delivered == 0);
  CHECK(net.account(0).tx_count == 50);
  CHECK(net.account(0).consumed_j() > 0);
}

TEST_CASE("independent loss matches a binomial oracle") {
  Engine eng;
  Topology topo = line_topology(2, 100, 271.3);
  RadioParams radio;
  radio.mac.loss = 0.1;
  EnergyParams ep;
  ep.initial_j = 100;  // enough for 1000 broadcasts without depleting
  Network net(eng, topo, radio, ep, PacketSizes{}, 12345);
  int delivered = 0;
  net.set_delivery_handler(
      [&](NodeId, NodeId, const Packet&) { ++delivered; });
  Packet p;
  p.kind = PacketKind::Data;
  p.size_bytes = 64;
  const int n = 1000;
  for (int i = 0; i < n; ++i) net.transmit(0, p);
  eng.run_until(SimTime::from_seconds(10));
  double mean = n * 0.9;
  double sigma = std::sqrt(n * 0.9 * 0.1);
  CHECK(delivered > mean - 3 * sigma);
  CHECK(delivered < mean + 3 * sigma);
}

TEST_CASE("per-node energy conservation") {
  Engine eng;
  Topology topo = Topology::generate(15, 400, 400, kDefaultRangeM, 9);
  Network net(eng, topo, RadioParams{}, EnergyParams{}, PacketSizes{}, 9);
  net.log().enabled = true;
  // Everyone rebroadcasts the first copy it hears.
  std::set<std::uint64_t> seen;
  net.set_delivery_handler([&](NodeId r, NodeId, const Packet& p) {
    if (seen.insert(packet_key(p) ^ (std::uint64_t(r) << 40)).second) {
      net.transmit(r, p);
    }
  });
  Packet p;
  p.kind = PacketKind::Data;
  p.origin = 0;
  p.size_bytes = 64;
  net.transmit(0, p);
  eng.run_until(SimTime::from_seconds(5));

  std::vector<double> debits(topo.size(), 0);
  std::uint64_t in_bytes = 0, out_bytes = 0;
  for (const auto& e : net.log().events) {
    if (e.op == PacketEvent::Op::Tx) {
      debits[e.node] += e.energy_j;
      out_bytes += e.bytes;
    } else if (e.op == PacketEvent::Op::Rx) {
      debits[e.node] += e.energy_j;
      in_bytes += e.bytes;
    }
  }
  for (NodeId i = 0; i < topo.size(); ++i) {
    CHECK(net.account(i).consumed_j() == debits[i]);
  }
  CHECK(net.byte_ledger().total_in() == in_bytes);
  CHECK(net.byte_ledger().total_out() == out_bytes);
}

TEST_CASE("depleted nodes neither transmit nor receive") {
  Engine eng;
  Topology topo = line_topology(3, 100, 271.3);
  EnergyParams ep;
  ep.initial_j = 1e-9;  // far below one packet's cost
  Network net(eng, topo, RadioParams{}, ep, PacketSizes{}, 1);
  int delivered = 0;
  net.set_delivery_handler(
      [&](NodeId, NodeId, const Packet&) { ++delivered; });
  Packet p;
  p.kind = PacketKind::Data;
  p.size_bytes = 64;
  net.transmit(0, p);  // drains node 0 to zero
  eng.run_until(SimTime::from_seconds(1));
  CHECK(net.account(0).remaining_j == 0);
  net.transmit(0, p);  // dead sender: no-op
  eng.run_until(SimTime::from_seconds(2));
  CHECK(net.account(0).tx_count == 1);
  CHECK(delivered <= 2);
}

TEST_CASE("killed nodes stop participating") {
  Engine eng;
  // 200 m spacing: only adjacent nodes are within range.
  Topology topo = line_topology(3, 200, 271.3);
  Network net(eng, topo, RadioParams{}, EnergyParams{}, PacketSizes{}, 1);
  int delivered = 0;
  net.set_delivery_handler(
      [&](NodeId, NodeId, const Packet&) { ++delivered; });
  net.kill(1);
  Packet p;
  p.kind = PacketKind::Data;
  p.size_bytes = 64;
  net.transmit(1, p);  // dead sender
  net.transmit(0, p);  // node 1 in range but dead, node 2 at 400 m
  eng.run_until(SimTime::from_seconds(1));
  CHECK(delivered == 0);
  CHECK(net.account(1).rx_count == 0);
}
